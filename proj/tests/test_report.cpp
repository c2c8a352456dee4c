#include <gtest/gtest.h>

#include <fstream>
#include <regex>
#include <sstream>

#include "qfano/report.hpp"

using namespace qfano;

namespace {
std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}
}  // namespace

TEST(Presets, Definitions) {
  auto a = find_preset("lemma-comput");
  ASSERT_TRUE(a);
  EXPECT_EQ(a->q_min, 8);
  EXPECT_EQ(a->q_max, 19);
  EXPECT_FALSE(a->filters.suzuki);
  EXPECT_FALSE(a->filters.torsion_free);
  auto b = find_preset("prop-comput");
  ASSERT_TRUE(b);
  EXPECT_EQ(b->q_min, 9);
  EXPECT_TRUE(b->filters.suzuki);
  EXPECT_TRUE(b->filters.torsion_free);
  EXPECT_FALSE(find_preset("nope"));
}

TEST(Snapshots, CommittedFilesMatch) {
  for (const char* name : {"lemma-comput", "prop-comput"}) {
    std::string path = std::string(QFANO_SNAPSHOT_DIR) + "/" + name + ".json";
    EXPECT_EQ(slurp(path), snapshot_text(*find_preset(name))) << path;
  }
}

TEST(Formats, ByteStable) {
  auto p = *find_preset("prop-comput");
  auto cs = classify(p.q_min, p.q_max, p.filters);
  ClassifyOptions four;
  four.workers = 4;
  auto cs4 = classify(p.q_min, p.q_max, p.filters, four);
  for (const char* f : {"json", "csv", "markdown"}) EXPECT_EQ(format_candidates(cs, f), format_candidates(cs4, f));
  EXPECT_THROW(format_candidates(cs, "xml"), Error);
}

TEST(Formats, CsvColumns) {
  auto csv = candidates_csv(classify(19, 19, FilterSet::defaults()));
  EXPECT_EQ(csv,
            "q,basket,a_cubed,kc2,dim_1,dim_2,dim_3,dim_4,dim_5,dim_6,dim_7,dim_minus_k,torsion_free\n"
            "19,3:1+4:1+5:2+7:3,1/420,2489/420,-1,-1,0,0,0,0,1,8,true\n");
}

TEST(Formats, MarkdownTenRows) {
  auto p = *find_preset("prop-comput");
  auto md = candidates_markdown(classify(p.q_min, p.q_max, p.filters));
  EXPECT_EQ(std::count(md.begin(), md.end(), '\n'), 12);
  EXPECT_NE(md.find("| 10 | (7, 11) | 2/77 | -1 | 0 | 1 | 1 | 3 | 4 | 6 | 13 |"), std::string::npos);
}

TEST(Formats, NoDecimals) {
  auto p = *find_preset("lemma-comput");
  auto cs = classify(p.q_min, p.q_max, p.filters);
  std::regex decimal(R"(\d\.\d)");
  for (const char* f : {"json", "csv", "markdown"}) EXPECT_FALSE(std::regex_search(format_candidates(cs, f), decimal)) << f;
}

TEST(Json, BasketRoundTrip) {
  Basket b = parse_basket("2:1+2:1+3:1+4:1+7:2");
  EXPECT_EQ(basket_from_json(basket_json(b)), b);
  EXPECT_THROW(basket_from_json(json::object()), Error);
  EXPECT_THROW(basket_from_json(json::parse(R"([{"r":4,"b":2}])")), Error);
}

TEST(Json, CandidateFields) {
  auto c = classify(17, 17, FilterSet::defaults()).at(0);
  auto j = candidate_json(c);
  EXPECT_EQ(j.at("a_cubed"), "1/210");
  EXPECT_EQ(j.at("kc2"), "1717/210");
  EXPECT_EQ(j.at("dim_minus_k"), 12);
  EXPECT_EQ(j.at("torsion_free"), true);
}
