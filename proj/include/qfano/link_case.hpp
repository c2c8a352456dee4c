#pragma once

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "basket.hpp"
#include "classifier.hpp"
#include "link_arithmetic.hpp"
#include "orbifold_rr.hpp"

namespace qfano {

using json = nlohmann::json;

// Linear comparison sum terms <op> rhs over named integer variables.
struct LinearAtom {
  enum class Op { Le, Ge, Eq, Ne };
  std::vector<std::pair<std::string, std::int64_t>> terms;
  Op op = Op::Eq;
  std::int64_t rhs = 0;
};

// A guard atom is either a linear comparison or the torsion-free fact.
struct GuardAtom {
  bool torsion_fact = false;
  LinearAtom linear;
};

using Dnf = std::vector<std::vector<GuardAtom>>;

enum class ConstraintKind {
  Linear,
  Congruence,
  Membership,
  Moveable,
  SingleContraction,
  Contracted,
  Threshold,
  BetaOrder,
  DimX,
  DimTheta,
  Forbid,
};

struct Constraint {
  ConstraintKind kind = ConstraintKind::Linear;
  json payload;
  std::string citation;
  bool imported = false;
  bool load_bearing = false;
  std::optional<Dnf> when;

  // parsed payload
  LinearAtom linear;
  std::int64_t modulus = 1, residue = 0;
  std::string var;
  std::vector<std::int64_t> values;
  int degree = 0;
  std::map<int, std::int64_t> lhs, rhs;
  std::string multiple;
  std::int64_t at_least = 0;
  std::optional<int> at_least_x_degree;
};

struct Relation {
  std::string lhs = "qhat";
  std::vector<std::pair<std::string, std::int64_t>> rhs;
  std::map<int, std::int64_t> source;  // degree -> coefficient of S_k
  std::string citation;

  std::int64_t coefficient(const std::string& name) const {
    for (const auto& [n, c] : rhs)
      if (n == name) return c;
    return 0;
  }
};

struct LinkCase {
  std::string name;
  std::string description;
  int q = 0;
  Basket basket;
  int r = 2;
  int threshold_point = 0;
  int mobile_degree = 0;
  std::vector<std::string> unknowns;
  std::vector<std::pair<std::string, int>> slots;  // u -> degree k, u = s_k + e*m_k
  std::vector<Relation> relations;
  Dnf torsion_free_when;
  std::vector<Constraint> constraints;

  LinkContext context() const {
    std::vector<int> ds;
    for (const auto& [n, k] : slots) ds.push_back(k);
    return make_link_context(q, basket, r, ds);
  }
};

namespace detail {

inline void need(bool ok, const std::string& what) {
  if (!ok) throw Error(Errc::Parse, what);
}

inline std::vector<std::pair<std::string, std::int64_t>> parse_terms(const json& j) {
  need(j.is_object(), "terms must be an object");
  std::vector<std::pair<std::string, std::int64_t>> out;
  for (auto it = j.begin(); it != j.end(); ++it) {
    need(it.value().is_number_integer(), "coefficient of " + it.key() + " must be an integer");
    out.emplace_back(it.key(), it.value().get<std::int64_t>());
  }
  return out;
}

inline std::map<int, std::int64_t> parse_degree_map(const json& j) {
  need(j.is_object(), "degree map must be an object");
  std::map<int, std::int64_t> out;
  for (auto it = j.begin(); it != j.end(); ++it) {
    need(it.value().is_number_integer(), "degree coefficient must be an integer");
    out[parse_int(it.key())] = it.value().get<std::int64_t>();
  }
  return out;
}

inline LinearAtom parse_linear(const json& j) {
  need(j.is_object() && j.contains("terms") && j.contains("op") && j.contains("rhs"), "linear atom needs terms/op/rhs");
  LinearAtom a;
  a.terms = parse_terms(j.at("terms"));
  std::string op = j.at("op").get<std::string>();
  if (op == "<=") a.op = LinearAtom::Op::Le;
  else if (op == ">=") a.op = LinearAtom::Op::Ge;
  else if (op == "=") a.op = LinearAtom::Op::Eq;
  else if (op == "!=") a.op = LinearAtom::Op::Ne;
  else throw Error(Errc::Parse, "unknown operator '" + op + "'");
  need(j.at("rhs").is_number_integer(), "rhs must be an integer");
  a.rhs = j.at("rhs").get<std::int64_t>();
  return a;
}

inline Dnf parse_dnf(const json& j, bool allow_fact) {
  need(j.is_array(), "guard must be a list of alternatives");
  Dnf out;
  for (const auto& alt : j) {
    need(alt.is_array(), "guard alternative must be a list of atoms");
    std::vector<GuardAtom> conj;
    for (const auto& atom : alt) {
      GuardAtom g;
      if (atom.contains("fact")) {
        need(allow_fact && atom.at("fact") == "torsion_free", "unsupported fact in guard");
        g.torsion_fact = true;
      } else {
        g.linear = parse_linear(atom);
      }
      conj.push_back(std::move(g));
    }
    out.push_back(std::move(conj));
  }
  return out;
}

inline ConstraintKind parse_kind(const std::string& k) {
  static const std::map<std::string, ConstraintKind> kinds = {
      {"linear", ConstraintKind::Linear},
      {"congruence", ConstraintKind::Congruence},
      {"membership", ConstraintKind::Membership},
      {"moveable", ConstraintKind::Moveable},
      {"single_contraction", ConstraintKind::SingleContraction},
      {"contracted", ConstraintKind::Contracted},
      {"threshold", ConstraintKind::Threshold},
      {"beta_order", ConstraintKind::BetaOrder},
      {"dim_x", ConstraintKind::DimX},
      {"dim_theta", ConstraintKind::DimTheta},
      {"forbid", ConstraintKind::Forbid},
  };
  auto it = kinds.find(k);
  if (it == kinds.end()) throw Error(Errc::Parse, "unknown constraint kind '" + k + "'");
  return it->second;
}

inline Constraint parse_constraint(const json& j) {
  need(j.is_object() && j.contains("kind"), "constraint needs a kind");
  Constraint c;
  c.kind = parse_kind(j.at("kind").get<std::string>());
  c.payload = j.value("payload", json::object());
  c.citation = j.value("citation", std::string{});
  c.imported = j.value("imported", false);
  c.load_bearing = j.value("load_bearing", false);
  if (j.contains("when")) c.when = parse_dnf(j.at("when"), true);
  const json& p = c.payload;
  switch (c.kind) {
    case ConstraintKind::Linear:
      c.linear = parse_linear(p);
      break;
    case ConstraintKind::Congruence:
      c.linear.terms = parse_terms(p.at("terms"));
      c.modulus = p.at("modulus").get<std::int64_t>();
      c.residue = p.at("residue").get<std::int64_t>();
      need(c.modulus >= 1, "modulus must be positive");
      break;
    case ConstraintKind::Membership:
      c.var = p.at("var").get<std::string>();
      c.values = p.at("values").get<std::vector<std::int64_t>>();
      need(!c.values.empty(), "membership set is empty");
      break;
    case ConstraintKind::Moveable:
    case ConstraintKind::Threshold:
      c.degree = p.at("degree").get<int>();
      break;
    case ConstraintKind::BetaOrder:
      c.lhs = parse_degree_map(p.at("lhs"));
      c.rhs = parse_degree_map(p.at("rhs"));
      break;
    case ConstraintKind::DimX:
    case ConstraintKind::DimTheta: {
      c.multiple = p.at("multiple").get<std::string>();
      const json& al = p.at("at_least");
      if (al.is_object()) c.at_least_x_degree = al.at("x_degree").get<int>();
      else c.at_least = al.get<std::int64_t>();
      break;
    }
    case ConstraintKind::SingleContraction:
    case ConstraintKind::Contracted:
    case ConstraintKind::Forbid:
      break;
  }
  return c;
}

}  // namespace detail

inline LinkCase parse_link_case(const json& j) {
  using detail::need;
  try {
    LinkCase lc;
    lc.name = j.at("name").get<std::string>();
    lc.description = j.value("description", std::string{});
    lc.q = j.at("q").get<int>();
    lc.basket = parse_basket(j.at("basket").get<std::string>());
    lc.r = j.at("r").get<int>();
    lc.threshold_point = j.value("threshold_point", lc.r);
    lc.mobile_degree = j.value("mobile_degree", 0);
    lc.unknowns = j.at("unknowns").get<std::vector<std::string>>();
    for (auto it = j.at("slots").begin(); it != j.at("slots").end(); ++it)
      lc.slots.emplace_back(it.key(), it.value().get<int>());
    for (const auto& rj : j.at("relations")) {
      Relation rel;
      rel.lhs = rj.value("lhs", std::string("qhat"));
      rel.rhs = detail::parse_terms(rj.at("rhs"));
      if (rj.contains("source")) rel.source = detail::parse_degree_map(rj.at("source"));
      rel.citation = rj.value("citation", std::string{});
      lc.relations.push_back(std::move(rel));
    }
    if (j.contains("torsion_free_when")) lc.torsion_free_when = detail::parse_dnf(j.at("torsion_free_when"), false);
    for (const auto& cj : j.at("constraints")) lc.constraints.push_back(detail::parse_constraint(cj));
    need(std::find(lc.unknowns.begin(), lc.unknowns.end(), "qhat") != lc.unknowns.end(), "unknowns must include qhat");
    need(std::find(lc.unknowns.begin(), lc.unknowns.end(), "e") != lc.unknowns.end(), "unknowns must include e");
    for (const auto& [n, k] : lc.slots)
      need(std::find(lc.unknowns.begin(), lc.unknowns.end(), n) != lc.unknowns.end(), "slot " + n + " is not an unknown");
    return lc;
  } catch (const json::exception& e) {
    throw Error(Errc::Parse, std::string("case file: ") + e.what());
  }
}

inline LinkCase load_link_case(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::NotFound, "cannot open case file " + path.string());
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw Error(Errc::Parse, path.string() + ": " + e.what());
  }
  return parse_link_case(j);
}

inline std::vector<std::string> list_link_cases(const std::filesystem::path& dir) {
  std::vector<std::string> out;
  if (!std::filesystem::is_directory(dir)) throw Error(Errc::NotFound, "no case directory " + dir.string());
  for (const auto& e : std::filesystem::directory_iterator(dir))
    if (e.path().extension() == ".json") out.push_back(e.path().stem().string());
  std::sort(out.begin(), out.end());
  return out;
}

// Relations must reproduce the slot coefficients and the e-coefficient
// a_coefficient(m = 0) of their source.  Returns one message per mismatch.
inline std::vector<std::string> check_relation_sources(const LinkCase& lc) {
  std::vector<std::string> bad;
  auto ctx = lc.context();
  for (std::size_t i = 0; i < lc.relations.size(); ++i) {
    const auto& rel = lc.relations[i];
    if (rel.source.empty()) continue;
    std::string tag = lc.name + " relation " + std::to_string(i + 1);
    for (const auto& [n, k] : lc.slots) {
      auto it = rel.source.find(k);
      std::int64_t want = it == rel.source.end() ? 0 : it->second;
      if (rel.coefficient(n) != want) bad.push_back(tag + ": coefficient of " + n + " is not " + std::to_string(want));
    }
    std::int64_t a = a_coefficient(ctx, rel.source);
    if (rel.coefficient("e") != a) bad.push_back(tag + ": e-coefficient is not " + std::to_string(a));
  }
  return bad;
}

// max over default-filter candidates of index qhat of dim|k Theta|; empty
// when qhat is outside [3,19], has no candidates, or some chi is fractional.
class DimThetaOracle {
 public:
  explicit DimThetaOracle(ClassifyOptions opt = {}) : opt_(std::move(opt)) {}

  std::optional<std::int64_t> operator()(std::int64_t qhat, std::int64_t k) {
    if (k == 0) return 0;
    if (qhat < 3 || qhat > 19 || !is_fano_index(static_cast<int>(qhat)) || k <= -qhat) return std::nullopt;
    std::lock_guard<std::mutex> lock(mu_);
    auto key = std::make_pair(qhat, k);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    auto& cands = candidates(static_cast<int>(qhat));
    std::optional<std::int64_t> best;
    for (const auto& rr : cands) {
      Rational c = rr.chi(k);
      if (!is_integer(c)) {
        best.reset();
        break;
      }
      std::int64_t d = to_int(c) - 1;
      if (!best || d > *best) best = d;
    }
    memo_[key] = best;
    return best;
  }

 private:
  const std::vector<RiemannRoch>& candidates(int qhat) {
    auto it = cands_.find(qhat);
    if (it != cands_.end()) return it->second;
    std::vector<RiemannRoch> v;
    for (const auto& c : classify(qhat, qhat, FilterSet::defaults(), opt_))
      v.emplace_back(PolarizedBasket{c.q, c.basket});
    return cands_.emplace(qhat, std::move(v)).first->second;
  }

  ClassifyOptions opt_;
  std::mutex mu_;
  std::map<int, std::vector<RiemannRoch>> cands_;
  std::map<std::pair<std::int64_t, std::int64_t>, std::optional<std::int64_t>> memo_;
};

struct LinkSolution {
  std::vector<std::pair<std::string, std::int64_t>> values;   // in unknowns order
  std::vector<std::pair<std::string, std::int64_t>> witness;  // s_k, m_k

  std::int64_t get(const std::string& name) const {
    for (const auto& [n, v] : values)
      if (n == name) return v;
    for (const auto& [n, v] : witness)
      if (n == name) return v;
    throw Error(Errc::NotFound, "no variable " + name);
  }
  bool operator==(const LinkSolution& o) const { return values == o.values; }
  bool operator<(const LinkSolution& o) const { return values < o.values; }
};

struct AuditEntry {
  std::vector<std::pair<std::string, std::int64_t>> values;
  std::optional<std::size_t> killed_by;  // index of the first constraint that empties the prefix
};

struct LinkReport {
  std::string name;
  std::vector<std::pair<std::string, std::int64_t>> box;  // upper bounds
  std::vector<LinkSolution> solutions;
  std::vector<AuditEntry> audit;
};

struct SolveOptions {
  bool relations_only = false;
  bool audit = false;
  bool reverse_search = false;
  DimThetaOracle* oracle = nullptr;  // shared lookup table; a private one is built if null
};

namespace detail {

class LinkSolver {
 public:
  LinkSolver(const LinkCase& lc, DimThetaOracle& oracle) : lc_(lc), oracle_(oracle), ctx_(lc.context()) {
    for (const auto& u : lc_.unknowns) index_[u] = vars_.size(), vars_.push_back(u);
    for (const auto& [n, k] : lc_.slots) {
      slot_index_.push_back(index_.at(n));
      degrees_.push_back(k);
      s_index_.push_back(add_var("s" + std::to_string(k)));
      m_index_.push_back(add_var("m" + std::to_string(k)));
    }
    e_ = index_.at("e");
    qhat_ = index_.at("qhat");
    compute_box();
    for (const auto& c : lc_.constraints) check_constraint(c);
  }

  LinkReport run(const SolveOptions& opt) {
    LinkReport rep;
    rep.name = lc_.name;
    for (std::size_t i = 0; i < lc_.unknowns.size(); ++i) rep.box.emplace_back(lc_.unknowns[i], bound_[i]);
    std::vector<std::int64_t> env(vars_.size(), 0);
    std::vector<std::size_t> order;
    for (std::size_t i = 0; i < lc_.unknowns.size(); ++i)
      if (i != qhat_) order.push_back(i);
    enumerate(order, 0, env, opt, rep);
    std::sort(rep.solutions.begin(), rep.solutions.end());
    std::sort(rep.audit.begin(), rep.audit.end(), [](const AuditEntry& a, const AuditEntry& b) { return a.values < b.values; });
    return rep;
  }

 private:
  std::size_t add_var(const std::string& n) {
    index_[n] = vars_.size();
    vars_.push_back(n);
    return vars_.size() - 1;
  }

  std::size_t var(const std::string& n) const {
    auto it = index_.find(n);
    if (it == index_.end()) throw Error(Errc::Parse, lc_.name + ": unknown variable '" + n + "'");
    return it->second;
  }

  std::size_t slot_of_degree(int k) const {
    for (std::size_t i = 0; i < degrees_.size(); ++i)
      if (degrees_[i] == k) return i;
    throw Error(Errc::Parse, lc_.name + ": degree " + std::to_string(k) + " has no slot");
  }

  void compute_box() {
    std::optional<std::int64_t> qmax;
    for (const auto& c : lc_.constraints)
      if (c.kind == ConstraintKind::Membership && c.var == "qhat" && !c.when) {
        std::int64_t m = *std::max_element(c.values.begin(), c.values.end());
        qmax = qmax ? std::min(*qmax, m) : m;
      }
    if (!qmax) throw Error(Errc::Unbounded, lc_.name + ": no membership cap on qhat");
    for (const auto& rel : lc_.relations) {
      if (rel.lhs != "qhat") throw Error(Errc::Unbounded, lc_.name + ": relation must express qhat");
      for (const auto& [n, c] : rel.rhs) {
        var(n);
        if (c < 0 || n == "qhat") throw Error(Errc::Unbounded, lc_.name + ": relation coefficients must be nonnegative");
      }
    }
    bound_.assign(lc_.unknowns.size(), 0);
    for (std::size_t i = 0; i < lc_.unknowns.size(); ++i) {
      if (i == qhat_) {
        bound_[i] = *qmax;
        continue;
      }
      std::int64_t minc = 0;
      for (const auto& rel : lc_.relations) {
        std::int64_t c = rel.coefficient(lc_.unknowns[i]);
        if (c > 0 && (minc == 0 || c < minc)) minc = c;
      }
      if (minc == 0) throw Error(Errc::Unbounded, lc_.name + ": unknown " + lc_.unknowns[i] + " is not bounded by any relation");
      bound_[i] = *qmax / minc;
    }
  }

  void check_atom(const LinearAtom& a) const {
    for (const auto& [n, c] : a.terms) var(n);
  }

  void check_dnf(const Dnf& d) const {
    for (const auto& conj : d)
      for (const auto& a : conj)
        if (!a.torsion_fact) check_atom(a.linear);
  }

  void check_constraint(const Constraint& c) const {
    if (c.when) check_dnf(*c.when);
    switch (c.kind) {
      case ConstraintKind::Linear:
      case ConstraintKind::Congruence: check_atom(c.linear); break;
      case ConstraintKind::Membership: var(c.var); break;
      case ConstraintKind::Moveable:
      case ConstraintKind::Threshold: slot_of_degree(c.degree); break;
      case ConstraintKind::BetaOrder:
        for (const auto& [k, v] : c.lhs) slot_of_degree(k);
        for (const auto& [k, v] : c.rhs) slot_of_degree(k);
        break;
      case ConstraintKind::DimX:
      case ConstraintKind::DimTheta: var(c.multiple); break;
      default: break;
    }
    check_dnf(lc_.torsion_free_when);
  }

  static std::int64_t eval_terms(const std::vector<std::pair<std::string, std::int64_t>>& terms,
                                 const std::map<std::string, std::size_t>& idx, const std::vector<std::int64_t>& env) {
    std::int64_t s = 0;
    for (const auto& [n, c] : terms) s += c * env[idx.at(n)];
    return s;
  }

  bool atom_holds(const LinearAtom& a, const std::vector<std::int64_t>& env) const {
    std::int64_t v = eval_terms(a.terms, index_, env);
    switch (a.op) {
      case LinearAtom::Op::Le: return v <= a.rhs;
      case LinearAtom::Op::Ge: return v >= a.rhs;
      case LinearAtom::Op::Eq: return v == a.rhs;
      case LinearAtom::Op::Ne: return v != a.rhs;
    }
    return false;
  }

  bool dnf_holds(const Dnf& d, const std::vector<std::int64_t>& env, bool tf) const {
    for (const auto& conj : d) {
      bool all = true;
      for (const auto& a : conj) {
        if (a.torsion_fact ? !tf : !atom_holds(a.linear, env)) {
          all = false;
          break;
        }
      }
      if (all) return true;
    }
    return false;
  }

  int dim_x(std::int64_t k) {
    auto it = dim_x_.find(k);
    if (it != dim_x_.end()) return it->second;
    if (!rr_) rr_.emplace(PolarizedBasket{lc_.q, lc_.basket});
    int d = rr_->dim(k);
    dim_x_[k] = d;
    return d;
  }

  Rational beta(std::size_t slot, const std::vector<std::int64_t>& env) const {
    return beta_fraction(ctx_, degrees_[slot]) + Rational(mpz_class(static_cast<long>(env[m_index_[slot]])));
  }

  bool holds(const Constraint& c, const std::vector<std::int64_t>& env, bool tf) {
    if (c.when && !dnf_holds(*c.when, env, tf)) return true;
    switch (c.kind) {
      case ConstraintKind::Linear: return atom_holds(c.linear, env);
      case ConstraintKind::Congruence:
        return mod(eval_terms(c.linear.terms, index_, env) - c.residue, c.modulus) == 0;
      case ConstraintKind::Membership:
        return std::find(c.values.begin(), c.values.end(), env[var(c.var)]) != c.values.end();
      case ConstraintKind::Moveable: {
        std::size_t s = slot_of_degree(c.degree);
        return dim_x(c.degree) < 1 || env[s_index_[s]] >= 1;
      }
      case ConstraintKind::SingleContraction: {
        int zeros = 0;
        for (std::size_t s = 0; s < s_index_.size(); ++s) zeros += env[s_index_[s]] == 0;
        return zeros <= 1;
      }
      case ConstraintKind::Contracted: {
        for (std::size_t s = 0; s < s_index_.size(); ++s)
          if (env[s_index_[s]] == 0 && degrees_[s] % env[e_] != 0) return false;
        return true;
      }
      case ConstraintKind::Threshold: {
        std::size_t s = slot_of_degree(c.degree);
        int tp = lc_.threshold_point;
        LinkContext tctx = tp == lc_.r ? ctx_ : make_link_context(lc_.q, lc_.basket, tp);
        // c = alpha / beta_M <= 1/mu
        Rational bound = ctx_.alpha / threshold_bound(tctx, c.degree);
        return beta(s, env) >= bound;
      }
      case ConstraintKind::BetaOrder: {
        Rational l = 0, r = 0;
        for (const auto& [k, v] : c.lhs) l += Rational(mpz_class(static_cast<long>(v))) * beta(slot_of_degree(k), env);
        for (const auto& [k, v] : c.rhs) r += Rational(mpz_class(static_cast<long>(v))) * beta(slot_of_degree(k), env);
        return l >= r;
      }
      case ConstraintKind::DimX: {
        std::int64_t need = c.at_least_x_degree ? dim_x(*c.at_least_x_degree) : c.at_least;
        return dim_x(env[var(c.multiple)]) >= need;
      }
      case ConstraintKind::DimTheta: {
        std::int64_t need = c.at_least_x_degree ? dim_x(*c.at_least_x_degree) : c.at_least;
        auto have = oracle_(env[qhat_], env[var(c.multiple)]);
        return !have || *have >= need;
      }
      case ConstraintKind::Forbid: return false;
    }
    return false;
  }

  // All splits u = s_k + e*m_k of the slot values.
  std::vector<std::vector<std::int64_t>> witnesses(const std::vector<std::int64_t>& base) const {
    std::vector<std::vector<std::int64_t>> out;
    std::vector<std::int64_t> env = base;
    std::int64_t e = env[e_];
    std::function<void(std::size_t)> rec = [&](std::size_t s) {
      if (s == slot_index_.size()) {
        out.push_back(env);
        return;
      }
      std::int64_t total = env[slot_index_[s]];
      for (std::int64_t m = 0; m * e <= total; ++m) {
        env[m_index_[s]] = m;
        env[s_index_[s]] = total - e * m;
        rec(s + 1);
      }
    };
    rec(0);
    return out;
  }

  void consider(std::vector<std::int64_t>& env, const SolveOptions& opt, LinkReport& rep) {
    std::optional<std::int64_t> qv;
    for (const auto& rel : lc_.relations) {
      std::int64_t v = eval_terms(rel.rhs, index_, env);
      if (qv && *qv != v) return;
      qv = v;
    }
    if (!qv || *qv > bound_[qhat_]) return;
    env[qhat_] = *qv;

    std::vector<std::pair<std::string, std::int64_t>> values;
    for (std::size_t i = 0; i < lc_.unknowns.size(); ++i) values.emplace_back(lc_.unknowns[i], env[i]);
    if (opt.relations_only) {
      rep.solutions.push_back(LinkSolution{values, {}});
      return;
    }
    std::vector<std::pair<std::vector<std::int64_t>, bool>> alive;
    for (auto& w : witnesses(env)) {
      bool tf = dnf_holds(lc_.torsion_free_when, w, false);
      alive.emplace_back(std::move(w), tf);
    }
    std::optional<std::size_t> killer;
    for (std::size_t ci = 0; ci < lc_.constraints.size() && !alive.empty(); ++ci) {
      std::vector<std::pair<std::vector<std::int64_t>, bool>> next;
      for (auto& a : alive)
        if (holds(lc_.constraints[ci], a.first, a.second)) next.push_back(std::move(a));
      alive.swap(next);
      if (alive.empty()) killer = ci;
      if (!opt.audit && alive.empty()) break;
    }
    if (opt.audit) rep.audit.push_back(AuditEntry{values, killer});
    if (!alive.empty()) {
      std::vector<std::pair<std::string, std::int64_t>> wit;
      for (std::size_t s = 0; s < slot_index_.size(); ++s) {
        wit.emplace_back(vars_[s_index_[s]], alive.front().first[s_index_[s]]);
        wit.emplace_back(vars_[m_index_[s]], alive.front().first[m_index_[s]]);
      }
      rep.solutions.push_back(LinkSolution{values, wit});
    }
  }

  void enumerate(const std::vector<std::size_t>& order, std::size_t depth, std::vector<std::int64_t>& env,
                 const SolveOptions& opt, LinkReport& rep) {
    if (depth == order.size()) {
      consider(env, opt, rep);
      return;
    }
    std::size_t i = order[depth];
    std::int64_t lo = i == e_ ? 1 : 0, hi = bound_[i];
    for (std::int64_t k = 0; k <= hi - lo; ++k) {
      env[i] = opt.reverse_search ? hi - k : lo + k;
      enumerate(order, depth + 1, env, opt, rep);
    }
  }

  const LinkCase& lc_;
  DimThetaOracle& oracle_;
  LinkContext ctx_;
  std::vector<std::string> vars_;
  std::map<std::string, std::size_t> index_;
  std::vector<std::size_t> slot_index_, s_index_, m_index_;
  std::vector<int> degrees_;
  std::size_t e_ = 0, qhat_ = 0;
  std::vector<std::int64_t> bound_;
  std::optional<RiemannRoch> rr_;
  std::map<std::int64_t, int> dim_x_;
};

}  // namespace detail

// Exhaustive scan of the box; e >= 1, all other unknowns >= 0.  With audit
// on, every relations-only tuple is listed with the constraint that killed it.
inline LinkReport solve_link_case(const LinkCase& lc, const SolveOptions& opt = {}) {
  std::optional<DimThetaOracle> own;
  DimThetaOracle* oracle = opt.oracle;
  if (!oracle) oracle = &own.emplace();
  return detail::LinkSolver(lc, *oracle).run(opt);
}

}  // namespace qfano
