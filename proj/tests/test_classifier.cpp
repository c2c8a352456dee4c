#include <gtest/gtest.h>

#include <map>

#include "qfano/classifier.hpp"

using namespace qfano;

namespace {
using Row = std::tuple<int, std::string, std::string, std::vector<int>>;

std::map<int, std::set<std::vector<int>>> by_q(const std::vector<FanoCandidate>& cs) {
  std::map<int, std::set<std::vector<int>>> m;
  for (const auto& c : cs) m[c.q].insert(c.basket.indices());
  return m;
}
}  // namespace

TEST(Vanishing, Values) {
  EXPECT_TRUE(check_vanishing(PolarizedBasket{19, parse_basket("3:1+4:1+5:2+7:3")}));
  EXPECT_FALSE(check_vanishing(PolarizedBasket{19, parse_basket("2:1")}));
  EXPECT_TRUE(check_vanishing(PolarizedBasket{3, Basket{}}));
  EXPECT_EQ(chi(PolarizedBasket{3, Basket{}}, 1), 5);
}

TEST(Suzuki, Values) {
  EXPECT_FALSE(suzuki_filter(PolarizedBasket{9, parse_basket("2:1+5:2+13:4")}));
  EXPECT_TRUE(suzuki_filter(PolarizedBasket{19, parse_basket("3:1+4:1+5:2+7:3")}));
  EXPECT_TRUE(suzuki_filter(PolarizedBasket{9, parse_basket("2:1+4:1+5:2")}));
}

TEST(Classify, SingleIndex) {
  auto c17 = classify(17, 17, FilterSet::defaults());
  ASSERT_EQ(c17.size(), 1u);
  EXPECT_EQ(c17[0].basket.indices(), (std::vector<int>{2, 3, 5, 7}));
  EXPECT_EQ(c17[0].a_cubed, frac(1, 210));

  auto c10 = classify(10, 10, FilterSet::defaults());
  ASSERT_EQ(c10.size(), 1u);
  EXPECT_EQ(c10[0].basket.indices(), (std::vector<int>{7, 11}));
  EXPECT_EQ(c10[0].a_cubed, frac(2, 77));

  auto c19 = classify(19, 19, FilterSet::defaults());
  ASSERT_EQ(c19.size(), 1u);
  std::vector<int> row;
  for (int k = 1; k <= 7; ++k) row.push_back(c19[0].dim(k));
  EXPECT_EQ(row, (std::vector<int>{-1, -1, 0, 0, 0, 0, 1}));
  EXPECT_EQ(c19[0].dim_minus_k(), 8);
  EXPECT_EQ(c19[0].kc2, frac(2489, 420));
}

TEST(Classify, HighIndexList) {
  auto got = by_q(classify(8, 19, FilterSet::defaults()));
  std::map<int, std::set<std::vector<int>>> want = {
      {8, {{3, 3, 5}, {3, 3, 5, 9}, {3, 5, 11}, {3, 7}, {3, 9}, {5, 7}, {7, 11}, {7, 13}, {11}}},
      {9, {{2, 4, 5}, {2, 2, 2, 5, 7}, {2, 5, 13}}},
      {10, {{7, 11}}},
      {11, {{2, 3, 5}, {2, 5, 7}, {2, 2, 3, 4, 7}}},
      {13, {{3, 4, 5}, {2, 3, 3, 5, 7}}},
      {17, {{2, 3, 5, 7}}},
      {19, {{3, 4, 5, 7}}}};
  EXPECT_EQ(got, want);
}

TEST(Classify, PropTable) {
  FilterSet f = FilterSet::defaults();
  f.suzuki = f.torsion_free = true;
  auto cs = classify(9, 19, f);
  std::vector<Row> want = {
      {9, "(2, 4, 5)", "1/20", {0, 1, 2, 4, 6, 8, 11, 19}},
      {9, "(2^3, 5, 7)", "1/70", {-1, 0, 0, 1, 1, 2, 3, 5}},
      {10, "(7, 11)", "2/77", {-1, 0, 1, 1, 3, 4, 6, 13}},
      {11, "(2, 3, 5)", "1/30", {0, 1, 2, 3, 5, 7, 9, 23}},
      {11, "(2, 5, 7)", "1/70", {0, 0, 0, 1, 2, 3, 4, 10}},
      {11, "(2^2, 3, 4, 7)", "1/84", {-1, 0, 0, 1, 1, 2, 3, 8}},
      {13, "(3, 4, 5)", "1/60", {0, 0, 1, 2, 3, 4, 5, 19}},
      {13, "(2, 3^2, 5, 7)", "1/210", {-1, -1, 0, 0, 0, 1, 1, 5}},
      {17, "(2, 3, 5, 7)", "1/210", {-1, 0, 0, 0, 1, 1, 2, 12}},
      {19, "(3, 4, 5, 7)", "1/420", {-1, -1, 0, 0, 0, 0, 1, 8}}};
  std::set<Row> got;
  for (const auto& c : cs) {
    std::vector<int> dims;
    for (int k = 1; k <= 7; ++k) dims.push_back(c.dim(k));
    dims.push_back(c.dim_minus_k());
    got.insert(Row{c.q, index_string(c.basket), to_string(c.a_cubed), dims});
  }
  EXPECT_EQ(cs.size(), 10u);
  EXPECT_EQ(got, std::set<Row>(want.begin(), want.end()));
}

TEST(Classify, SuzukiRemovesOnlyOne) {
  auto base = classify(9, 9, FilterSet::defaults());
  FilterSet f = FilterSet::defaults();
  f.suzuki = true;
  auto s = classify(9, 9, f);
  ASSERT_EQ(base.size(), 3u);
  ASSERT_EQ(s.size(), 2u);
  for (const auto& c : s) EXPECT_NE(c.basket.indices(), (std::vector<int>{2, 5, 13}));
}

TEST(SpecialSearch, Values) {
  auto a = special_search(5, 2);
  ASSERT_EQ(a.size(), 1u);
  EXPECT_EQ(a[0].q, 5);
  EXPECT_EQ(a[0].basket.indices(), (std::vector<int>{2}));
  EXPECT_EQ(a[0].a_cubed, frac(1, 2));

  auto b = special_search(7, 1);
  ASSERT_EQ(b.size(), 1u);
  EXPECT_EQ(b[0].q, 7);
  EXPECT_EQ(b[0].basket.indices(), (std::vector<int>{2, 3}));
  EXPECT_EQ(b[0].a_cubed, frac(1, 6));

  EXPECT_TRUE(special_search(9, 1).empty());
  EXPECT_THROW(special_search(4, 1), Error);
}

TEST(Classify, RangeErrors) {
  EXPECT_THROW(classify(2, 5), Error);
  EXPECT_THROW(classify(9, 8), Error);
  EXPECT_THROW(classify(8, 20), Error);
}

// Adding a filter never adds candidates.
TEST(Property, FilterMonotonicity) {
  const std::vector<FilterSet> chain = [] {
    std::vector<FilterSet> v;
    FilterSet f = FilterSet::none();
    v.push_back(f);
    f.positive_degree = true;
    v.push_back(f);
    f.integrality = true;
    v.push_back(f);
    f.degree_bound = true;
    v.push_back(f);
    f.vanishing = true;
    v.push_back(f);
    f.suzuki = true;
    v.push_back(f);
    f.torsion_free = true;
    v.push_back(f);
    return v;
  }();
  std::vector<std::pair<int, Basket>> prev;
  bool first = true;
  for (const auto& f : chain) {
    std::vector<std::pair<int, Basket>> cur;
    for (const auto& c : classify(13, 19, f)) cur.emplace_back(c.q, c.basket);
    if (!first) {
      EXPECT_TRUE(std::includes(prev.begin(), prev.end(), cur.begin(), cur.end()));
    }
    EXPECT_TRUE(f.subset_of(FilterSet{true, true, true, true, true, true, true}));
    prev = std::move(cur);
    first = false;
  }
}

TEST(Classify, WorkersDoNotChangeOutput) {
  ClassifyOptions one, four;
  four.workers = 4;
  auto a = classify(8, 19, FilterSet::defaults(), one);
  auto b = classify(8, 19, FilterSet::defaults(), four);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].q, b[i].q);
    EXPECT_EQ(a[i].basket, b[i].basket);
    EXPECT_EQ(a[i].dims, b[i].dims);
  }
}
