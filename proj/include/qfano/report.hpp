#pragma once

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "classifier.hpp"
#include "link_case.hpp"
#include "torsion.hpp"
#include "wps.hpp"

namespace qfano {

struct Preset {
  std::string name;
  int q_min = 8;
  int q_max = 19;
  FilterSet filters;
};

inline std::optional<Preset> find_preset(const std::string& name) {
  if (name == "lemma-comput") return Preset{name, 8, 19, FilterSet::defaults()};
  if (name == "prop-comput") {
    FilterSet f = FilterSet::defaults();
    f.suzuki = true;
    f.torsion_free = true;
    return Preset{name, 9, 19, f};
  }
  return std::nullopt;
}

inline json basket_json(const Basket& b) {
  json a = json::array();
  for (const auto& p : b) a.push_back({{"r", p.r}, {"b", p.b}});
  return a;
}

inline Basket basket_from_json(const json& j) {
  if (!j.is_array()) throw Error(Errc::Parse, "basket JSON must be an array");
  std::vector<BasketPoint> pts;
  for (const auto& p : j) {
    if (!p.is_object() || !p.contains("r") || !p.contains("b")) throw Error(Errc::Parse, "basket point needs r and b");
    pts.push_back(make_point(p.at("r").get<int>(), p.at("b").get<int>()));
  }
  return Basket(std::move(pts));
}

inline json candidate_json(const FanoCandidate& c) {
  return json{{"q", c.q},
              {"basket", to_string(c.basket)},
              {"indices", c.basket.indices()},
              {"a_cubed", to_string(c.a_cubed)},
              {"kc2", to_string(c.kc2)},
              {"dims", c.dims},
              {"dim_minus_k", c.dim_minus_k()},
              {"torsion_free", c.torsion_free},
              {"filters", c.filters_applied}};
}

inline std::string candidates_json(const std::vector<FanoCandidate>& cs, const std::string& label = "") {
  json arr = json::array();
  for (const auto& c : cs) arr.push_back(candidate_json(c));
  json doc{{"count", cs.size()}, {"candidates", arr}};
  if (!label.empty()) doc["preset"] = label;
  return doc.dump(2) + "\n";
}

inline std::string candidates_csv(const std::vector<FanoCandidate>& cs) {
  std::ostringstream os;
  os << "q,basket,a_cubed,kc2,dim_1,dim_2,dim_3,dim_4,dim_5,dim_6,dim_7,dim_minus_k,torsion_free\n";
  for (const auto& c : cs) {
    os << c.q << ',' << to_string(c.basket) << ',' << to_string(c.a_cubed) << ',' << to_string(c.kc2);
    for (int k = 1; k <= 7; ++k) os << ',' << c.dim(k);
    os << ',' << c.dim_minus_k() << ',' << (c.torsion_free ? "true" : "false") << '\n';
  }
  return os.str();
}

inline std::string candidates_markdown(const std::vector<FanoCandidate>& cs) {
  std::ostringstream os;
  os << "| q | B | A^3 | A | 2A | 3A | 4A | 5A | 6A | 7A | -K |\n";
  os << "|---|---|---|---|---|---|---|---|---|---|---|\n";
  for (const auto& c : cs) {
    os << "| " << c.q << " | " << index_string(c.basket) << " | " << to_string(c.a_cubed) << " |";
    for (int k = 1; k <= 7; ++k) os << ' ' << c.dim(k) << " |";
    os << ' ' << c.dim_minus_k() << " |\n";
  }
  return os.str();
}

inline std::string format_candidates(const std::vector<FanoCandidate>& cs, const std::string& format,
                                     const std::string& label = "") {
  if (format == "json") return candidates_json(cs, label);
  if (format == "csv") return candidates_csv(cs);
  if (format == "markdown") return candidates_markdown(cs);
  throw Error(Errc::Parse, "unknown format '" + format + "'");
}

inline std::string snapshot_text(const Preset& p, const ClassifyOptions& opt = {}) {
  return candidates_json(classify(p.q_min, p.q_max, p.filters, opt), p.name);
}

inline json oracle_json(const OracleReport& rep) {
  json rows = json::array();
  for (const auto& r : rep.rows)
    rows.push_back({{"k", r.k}, {"chi", to_string(r.chi)}, {"monomials", r.count}, {"match", r.match}});
  return json{{"weights", rep.space.weights},
              {"q", rep.space.q()},
              {"basket", to_string(rep.basket)},
              {"a_cubed", to_string(rep.a_cubed)},
              {"expected_a_cubed", to_string(rep.expected_a_cubed)},
              {"a_cubed_match", rep.a_cubed_match()},
              {"mismatches", rep.mismatches},
              {"rows", rows}};
}

inline json torsion_json(const Basket& b, int n, const TorsionResult& res) {
  json ws = json::array();
  for (const auto& h : res.witnesses) {
    json sup = json::array();
    for (const auto& a : h.support) sup.push_back({{"r", a.point.r}, {"b", a.point.b}, {"i", a.i}});
    ws.push_back({{"support", sup}, {"defect", to_string(torsion_defect(h))}});
  }
  return json{{"basket", to_string(b)}, {"n", n}, {"feasible", res.feasible}, {"witnesses", ws}};
}

inline std::string values_string(const std::vector<std::pair<std::string, std::int64_t>>& vs) {
  std::string s = "(";
  for (std::size_t i = 0; i < vs.size(); ++i) s += (i ? ", " : "") + vs[i].first + "=" + std::to_string(vs[i].second);
  return s + ")";
}

inline std::string link_text(const LinkCase& lc, const LinkReport& rep, bool audit) {
  std::ostringstream os;
  os << rep.name << ": " << rep.solutions.size() << (rep.solutions.size() == 1 ? " solution" : " solutions") << '\n';
  for (const auto& s : rep.solutions) {
    os << "  " << values_string(s.values);
    if (!s.witness.empty()) os << " witness " << values_string(s.witness);
    os << '\n';
  }
  if (audit) {
    os << "audit (" << rep.audit.size() << " relation solutions):\n";
    for (const auto& a : rep.audit) {
      os << "  " << values_string(a.values) << " -> ";
      if (a.killed_by) {
        const auto& c = lc.constraints[*a.killed_by];
        os << "killed by #" << *a.killed_by << " [" << c.payload.dump() << "] " << c.citation;
      } else {
        os << "survives";
      }
      os << '\n';
    }
  }
  return os.str();
}

inline json link_json(const LinkCase& lc, const LinkReport& rep) {
  auto obj = [](const std::vector<std::pair<std::string, std::int64_t>>& vs) {
    json o = json::object();
    for (const auto& [n, v] : vs) o[n] = v;
    return o;
  };
  json sols = json::array();
  for (const auto& s : rep.solutions) sols.push_back({{"values", obj(s.values)}, {"witness", obj(s.witness)}});
  json audit = json::array();
  for (const auto& a : rep.audit) {
    json e{{"values", obj(a.values)}};
    e["killed_by"] = a.killed_by ? json(*a.killed_by) : json(nullptr);
    if (a.killed_by) e["citation"] = lc.constraints[*a.killed_by].citation;
    audit.push_back(e);
  }
  return json{{"case", rep.name}, {"box", obj(rep.box)}, {"solutions", sols}, {"audit", audit}};
}

}  // namespace qfano
