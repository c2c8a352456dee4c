#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>

#include "CLI11.hpp"

#include "qfano/qfano.hpp"

#ifndef QFANO_CASES_DIR
#define QFANO_CASES_DIR "cases"
#endif

namespace {

constexpr int kExitSnapshot = 2;
constexpr int kExitUsage = 64;

unsigned workers_from_env() {
  const char* v = std::getenv("QFANO_WORKERS");
  if (!v || !*v) return 1;
  try {
    int n = std::stoi(v);
    if (n == 0) return std::max(1u, std::thread::hardware_concurrency());
    return n > 0 ? static_cast<unsigned>(n) : 1u;
  } catch (const std::exception&) {
    return 1;
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw qfano::Error(qfano::Errc::NotFound, "cannot read " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw qfano::Error(qfano::Errc::NotFound, "cannot write " + path);
  out << text;
}

// Byte comparison; reports the first differing line.
int verify_snapshot(const std::string& fresh, const std::string& path) {
  std::string stored = read_file(path);
  if (stored == fresh) {
    std::cout << "snapshot " << path << ": ok\n";
    return 0;
  }
  std::istringstream a(stored), b(fresh);
  std::string la, lb;
  int line = 1;
  while (true) {
    bool ga = static_cast<bool>(std::getline(a, la));
    bool gb = static_cast<bool>(std::getline(b, lb));
    if (!ga && !gb) break;
    if (!ga || !gb || la != lb) {
      std::cerr << "snapshot " << path << " diverges at line " << line << "\n  stored: " << (ga ? la : "<eof>")
                << "\n  actual: " << (gb ? lb : "<eof>") << "\n";
      break;
    }
    ++line;
  }
  return kExitSnapshot;
}

qfano::Preset resolve_preset(const std::string& name) {
  auto p = qfano::find_preset(name);
  if (!p) throw qfano::Error(qfano::Errc::Parse, "unknown preset '" + name + "'");
  return *p;
}

bool is_usage_error(qfano::Errc c) {
  switch (c) {
    case qfano::Errc::Parse:
    case qfano::Errc::Range:
    case qfano::Errc::InvalidPoint:
    case qfano::Errc::Unsupported:
    case qfano::Errc::NonTerminal:
    case qfano::Errc::NoInverse:
    case qfano::Errc::UnsupportedIndex:
    case qfano::Errc::NotFound:
      return true;
    default:
      return false;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact classification engine for Q-Fano threefolds of large Fano index"};
  app.require_subcommand(1);

  qfano::ClassifyOptions copt;
  copt.workers = workers_from_env();

  // enumerate
  auto* en = app.add_subcommand("enumerate", "List baskets of bounded weight");
  std::string en_weight = "24", en_format = "text";
  bool en_count = false;
  en->add_option("--max-weight", en_weight, "Weight cap sum(r - 1/r), as p/q");
  en->add_option("--format", en_format, "text | json")->check(CLI::IsMember({"text", "json"}));
  en->add_flag("--count", en_count, "Print only the number of baskets");

  // classify / table
  struct ClassifyArgs {
    std::string preset, format, verify, write, weight = "24";
    int q_min = 8, q_max = 19;
    bool suzuki = false, torsion = false;
    std::optional<int> min_dim_a;
  };
  ClassifyArgs ca, ta;
  auto add_classify = [&](CLI::App* sub, ClassifyArgs& a, const std::string& default_format) {
    a.format = default_format;
    sub->add_option("--preset", a.preset, "lemma-comput | prop-comput");
    sub->add_option("--q-min", a.q_min, "Smallest Fano index");
    sub->add_option("--q-max", a.q_max, "Largest Fano index");
    sub->add_flag("--suzuki", a.suzuki, "Apply the Suzuki inequality");
    sub->add_flag("--torsion-free", a.torsion, "Require a torsion-free class group");
    sub->add_option("--max-weight", a.weight, "Basket weight cap");
    sub->add_option("--format", a.format, "json | csv | markdown")->check(CLI::IsMember({"json", "csv", "markdown"}));
    sub->add_option("--min-dim-a", a.min_dim_a, "Keep candidates with dim|A| >= N (needs q-min >= 5)");
    sub->add_option("--verify-snapshot", a.verify, "Compare JSON output with a stored snapshot");
    sub->add_option("--write-snapshot", a.write, "Store JSON output as a snapshot");
  };
  auto* cl = app.add_subcommand("classify", "Run the basket classification");
  add_classify(cl, ca, "json");
  auto* tb = app.add_subcommand("table", "Classification rendered as a table");
  add_classify(tb, ta, "markdown");

  // wps
  auto* wp = app.add_subcommand("wps", "Weighted projective space oracle");
  std::string wp_weights, wp_format = "json";
  bool wp_compare = false;
  int wp_kmax = -1;
  std::optional<int> wp_degree;
  wp->add_option("--weights", wp_weights, "Four weights, e.g. 3,4,5,7")->required();
  wp->add_flag("--compare", wp_compare, "Compare chi(kA) with monomial counts");
  wp->add_option("--kmax", wp_kmax, "Largest degree compared (default 2q)");
  wp->add_option("--degree", wp_degree, "Print the monomial count in one degree");
  wp->add_option("--format", wp_format, "json | text")->check(CLI::IsMember({"json", "text"}));

  // torsion
  auto* to = app.add_subcommand("torsion", "Torsion sieve");
  std::string to_basket;
  std::vector<int> to_n;
  bool to_supports = false;
  to->add_option("--basket", to_basket, "Basket, e.g. 5:1+5:2+5:2+5:1");
  to->add_option("--n", to_n, "Torsion orders (default 2,3,5,7)");
  to->add_flag("--supports", to_supports, "List feasible full-support index sets for each n");

  // link
  auto* lk = app.add_subcommand("link", "Solve a link case file");
  std::string lk_case, lk_file, lk_dir = QFANO_CASES_DIR, lk_format = "text";
  bool lk_audit = false, lk_rel = false, lk_list = false;
  lk->add_option("--case", lk_case, "Case name, e.g. q10-r11");
  lk->add_option("--file", lk_file, "Case file path");
  lk->add_option("--cases-dir", lk_dir, "Directory of case files");
  lk->add_flag("--audit", lk_audit, "Report which constraint removes each relation solution");
  lk->add_flag("--relations-only", lk_rel, "Ignore side constraints");
  lk->add_flag("--list", lk_list, "List available cases");
  lk->add_option("--format", lk_format, "text | json")->check(CLI::IsMember({"text", "json"}));

  // verify-snapshot
  auto* vs = app.add_subcommand("verify-snapshot", "Regenerate a preset and compare with its snapshot");
  std::string vs_preset, vs_path;
  vs->add_option("--preset", vs_preset, "lemma-comput | prop-comput")->required();
  vs->add_option("--snapshot", vs_path, "Snapshot file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }

  try {
    if (*en) {
      qfano::Rational w = qfano::parse_rational(en_weight);
      if (w < 0) throw qfano::Error(qfano::Errc::Range, "max weight must be nonnegative");
      auto bs = qfano::enumerate_baskets(w);
      if (en_count) {
        std::cout << bs.size() << "\n";
      } else if (en_format == "json") {
        qfano::json arr = qfano::json::array();
        for (const auto& b : bs) arr.push_back(qfano::basket_json(b));
        std::cout << qfano::json{{"count", bs.size()}, {"baskets", arr}}.dump(2) << "\n";
      } else {
        for (const auto& b : bs) std::cout << (b.empty() ? "{}" : qfano::to_string(b)) << "\n";
      }
      return 0;
    }

    for (auto [sub, a] : {std::pair{cl, &ca}, std::pair{tb, &ta}}) {
      if (!*sub) continue;
      qfano::FilterSet f = qfano::FilterSet::defaults();
      int q_min = a->q_min, q_max = a->q_max;
      std::string label;
      if (!a->preset.empty()) {
        auto p = resolve_preset(a->preset);
        f = p.filters;
        q_min = p.q_min;
        q_max = p.q_max;
        label = p.name;
      }
      f.suzuki = f.suzuki || a->suzuki;
      f.torsion_free = f.torsion_free || a->torsion;
      qfano::ClassifyOptions opt = copt;
      opt.max_weight = qfano::parse_rational(a->weight);
      std::vector<qfano::FanoCandidate> cs;
      if (a->min_dim_a) {
        for (auto& c : qfano::special_search(q_min, *a->min_dim_a, opt))
          if (c.q <= q_max) cs.push_back(std::move(c));
      } else {
        cs = qfano::classify(q_min, q_max, f, opt);
      }
      std::string text = qfano::format_candidates(cs, a->format, label);
      std::string snap = qfano::candidates_json(cs, label);
      if (!a->write.empty()) write_file(a->write, snap);
      if (!a->verify.empty()) {
        std::cout << text;
        return verify_snapshot(snap, a->verify);
      }
      std::cout << text;
      return 0;
    }

    if (*wp) {
      auto w = qfano::parse_weights(wp_weights);
      qfano::validate(w);
      if (wp_degree) {
        std::cout << qfano::monomial_count(w, *wp_degree) << "\n";
        return 0;
      }
      int kmax = wp_kmax >= 0 ? wp_kmax : 2 * w.q();
      if (!wp_compare) kmax = std::min(kmax, 0);
      auto rep = qfano::oracle_compare(w, kmax);
      if (wp_format == "json") {
        std::cout << qfano::oracle_json(rep).dump(2) << "\n";
      } else {
        std::cout << "P(" << w.to_string() << "): q=" << w.q() << " basket " << qfano::to_string(rep.basket)
                  << " A^3=" << qfano::to_string(rep.a_cubed) << " (expected "
                  << qfano::to_string(rep.expected_a_cubed) << ")\n";
        if (wp_compare) std::cout << rep.mismatches.size() << " mismatches for 0 <= k <= " << kmax << "\n";
      }
      return 0;
    }

    if (*to) {
      if (to_n.empty()) to_n = {2, 3, 5, 7};
      qfano::json out = qfano::json::array();
      if (to_supports) {
        for (int n : to_n) {
          qfano::json sets = qfano::json::array();
          for (const auto& s : qfano::feasible_supports(n)) sets.push_back(s);
          out.push_back({{"n", n}, {"supports", sets}});
        }
      } else {
        if (to->count("--basket") == 0) throw qfano::Error(qfano::Errc::Parse, "torsion needs --basket or --supports");
        auto b = qfano::parse_basket(to_basket);
        for (int n : to_n) out.push_back(qfano::torsion_json(b, n, qfano::torsion_feasible(b, n)));
        std::cout << qfano::json{{"basket", qfano::to_string(b)}, {"torsion_free", qfano::torsion_free(b)}, {"checks", out}}.dump(2)
                  << "\n";
        return 0;
      }
      std::cout << out.dump(2) << "\n";
      return 0;
    }

    if (*lk) {
      if (lk_list) {
        for (const auto& n : qfano::list_link_cases(lk_dir)) std::cout << n << "\n";
        return 0;
      }
      if (lk_case.empty() == lk_file.empty()) throw qfano::Error(qfano::Errc::Parse, "give exactly one of --case or --file");
      std::filesystem::path path = lk_file.empty() ? std::filesystem::path(lk_dir) / (lk_case + ".json") : std::filesystem::path(lk_file);
      auto lc = qfano::load_link_case(path);
      qfano::DimThetaOracle oracle(copt);
      qfano::SolveOptions so;
      so.audit = lk_audit;
      so.relations_only = lk_rel;
      so.oracle = &oracle;
      auto rep = qfano::solve_link_case(lc, so);
      if (lk_format == "json") std::cout << qfano::link_json(lc, rep).dump(2) << "\n";
      else std::cout << qfano::link_text(lc, rep, lk_audit);
      return 0;
    }

    if (*vs) {
      auto p = resolve_preset(vs_preset);
      return verify_snapshot(qfano::snapshot_text(p, copt), vs_path);
    }
  } catch (const qfano::Error& e) {
    std::cerr << "qfano: " << e.what() << "\n";
    return is_usage_error(e.code()) ? kExitUsage : 1;
  }
  return 0;
}
