#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <set>
#include <vector>

#include "basket.hpp"
#include "rational.hpp"

namespace qfano {

struct TorsionAssignment {
  BasketPoint point;
  int i = 0;  // local index of the torsion class, n*i == 0 (mod r), i != 0
  bool operator==(const TorsionAssignment&) const = default;
};

struct TorsionHypothesis {
  int n = 2;
  std::vector<TorsionAssignment> support;
  bool operator==(const TorsionHypothesis&) const = default;
};

struct TorsionResult {
  bool feasible = false;
  std::vector<TorsionHypothesis> witnesses;
};

inline Rational torsion_term(const BasketPoint& p, int i) {
  std::int64_t ov = mod(static_cast<std::int64_t>(p.b) * i, p.r);
  return frac(ov * (p.r - ov), 2 * p.r);
}

inline Rational torsion_defect(const TorsionHypothesis& h) {
  Rational d = 0;
  for (const auto& a : h.support) d += torsion_term(a.point, a.i);
  return d;
}

// j*Xi for 0 < j < n is again a nonzero torsion class, so it must satisfy
// the same identity; points where it becomes Cartier contribute 0.
inline TorsionHypothesis torsion_multiple(const TorsionHypothesis& h, int j) {
  TorsionHypothesis m{h.n, {}};
  for (const auto& a : h.support) {
    int i = static_cast<int>(mod(static_cast<std::int64_t>(a.i) * j, a.point.r));
    if (i != 0) m.support.push_back(TorsionAssignment{a.point, i});
  }
  return m;
}

inline bool torsion_consistent(const TorsionHypothesis& h) {
  for (int j = 1; j < h.n; ++j)
    if (torsion_defect(torsion_multiple(h, j)) != 2) return false;
  return true;
}

namespace detail {

struct TorsionGroup {
  BasketPoint point;
  int count = 0;
  std::vector<int> residues;  // admissible i
  std::vector<Rational> terms;
};

inline std::vector<TorsionGroup> torsion_groups(const Basket& basket, int n) {
  std::vector<TorsionGroup> groups;
  for (const auto& p : basket) {
    int g = std::gcd(n, p.r);
    if (g == 1) continue;
    if (!groups.empty() && groups.back().point == p) {
      ++groups.back().count;
      continue;
    }
    TorsionGroup grp{p, 1, {}, {}};
    for (int k = 1; k < g; ++k) {
      grp.residues.push_back(k * (p.r / g));
      grp.terms.push_back(torsion_term(p, grp.residues.back()));
    }
    groups.push_back(std::move(grp));
  }
  return groups;
}

// Depth-first over groups; inside a group the residues are chosen as a
// multiset, so every witness is produced once.
class TorsionSearch {
 public:
  TorsionSearch(std::vector<TorsionGroup> groups, int n, bool full, std::size_t max_witnesses)
      : groups_(std::move(groups)), n_(n), full_(full), max_(max_witnesses) {}

  TorsionResult run() {
    std::vector<TorsionAssignment> cur;
    group(0, Rational(0), cur);
    return std::move(result_);
  }

 private:
  bool done() const { return result_.feasible && result_.witnesses.size() >= max_; }

  void group(std::size_t gi, const Rational& acc, std::vector<TorsionAssignment>& cur) {
    if (done()) return;
    if (gi == groups_.size()) {
      if (acc == 2 && !cur.empty()) {
        TorsionHypothesis h{n_, cur};
        if (!torsion_consistent(h)) return;
        result_.feasible = true;
        if (result_.witnesses.size() < max_) result_.witnesses.push_back(std::move(h));
      }
      return;
    }
    residue(gi, 0, groups_[gi].count, acc, cur);
  }

  void residue(std::size_t gi, std::size_t ri, int left, const Rational& acc,
               std::vector<TorsionAssignment>& cur) {
    const auto& g = groups_[gi];
    if (ri == g.residues.size()) {
      if (!full_ || left == 0) group(gi + 1, acc, cur);
      return;
    }
    std::size_t mark = cur.size();
    Rational a = acc;
    for (int c = 0; c <= left; ++c) {
      if (c > 0) {
        a += g.terms[ri];
        if (a > 2) break;
        cur.push_back(TorsionAssignment{g.point, g.residues[ri]});
      }
      residue(gi, ri + 1, left - c, a, cur);
      if (done()) break;
    }
    cur.resize(mark);
  }

  std::vector<TorsionGroup> groups_;
  int n_;
  bool full_;
  std::size_t max_;
  TorsionResult result_;
};

}  // namespace detail

// Searches all supports and residue assignments for defect exactly 2 (for
// the class and each of its nonzero multiples).
inline TorsionResult torsion_feasible(const Basket& basket, int n, std::size_t max_witnesses = 64) {
  if (n < 2) throw Error(Errc::Range, "torsion order must be >= 2");
  return detail::TorsionSearch(detail::torsion_groups(basket, n), n, false, max_witnesses).run();
}

// As torsion_feasible, but every point with gcd(n,r) > 1 must be in the support.
inline TorsionResult torsion_feasible_full_support(const Basket& basket, int n, std::size_t max_witnesses = 1) {
  if (n < 2) throw Error(Errc::Range, "torsion order must be >= 2");
  return detail::TorsionSearch(detail::torsion_groups(basket, n), n, true, max_witnesses).run();
}

inline bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Prime n: every multiple j*Xi must satisfy 4n^2 = sum r_P xi_P (n - xi_P)
// with xi_P the residue of j*xi.  Integer DP over the vector of these sums,
// one entry per j up to sign.
inline bool torsion_feasible_prime(const Basket& basket, int n) {
  if (!is_prime(n)) throw Error(Errc::Range, "prime shortcut needs a prime order");
  const std::int64_t target = 4LL * n * n;
  const int classes = std::max(1, (n - 1) / 2);
  std::set<std::vector<std::int64_t>> reach{std::vector<std::int64_t>(classes, 0)};
  for (const auto& p : basket) {
    if (p.r % n != 0) continue;
    auto next = reach;
    for (const auto& s : reach) {
      for (int xi = 1; xi < n; ++xi) {
        auto t = s;
        bool ok = true;
        for (int j = 1; j <= classes && ok; ++j) {
          std::int64_t x = mod(static_cast<std::int64_t>(j) * xi, n);
          t[j - 1] += static_cast<std::int64_t>(p.r) * x * (n - x);
          ok = t[j - 1] <= target;
        }
        if (ok) next.insert(std::move(t));
      }
    }
    reach.swap(next);
  }
  return reach.count(std::vector<std::int64_t>(classes, target)) > 0;
}

inline constexpr int kTorsionPrimes[] = {2, 3, 5, 7};

inline bool torsion_free(const Basket& basket) {
  for (int n : kTorsionPrimes)
    if (torsion_feasible(basket, n, 1).feasible) return false;
  return true;
}

// Index multisets of baskets (weight <= max_weight) built only from points
// with n | r that carry an n-torsion class using every point.
inline std::set<std::vector<int>> feasible_supports(int n, const Rational& max_weight = 24) {
  std::set<std::vector<int>> out;
  auto pts = admissible_points(max_weight);
  std::vector<BasketPoint> sub;
  for (const auto& p : pts)
    if (p.r % n == 0) sub.push_back(p);
  std::vector<Rational> wts;
  for (const auto& p : sub) wts.push_back(point_weight(p));
  std::vector<BasketPoint> cur;
  std::function<void(std::size_t, const Rational&)> dfs = [&](std::size_t from, const Rational& left) {
    for (std::size_t j = from; j < sub.size(); ++j) {
      if (wts[j] > left) continue;
      cur.push_back(sub[j]);
      Basket b;
      b.points = cur;
      if (torsion_feasible_full_support(b, n).feasible) out.insert(b.indices());
      dfs(j, left - wts[j]);
      cur.pop_back();
    }
  };
  dfs(0, max_weight);
  return out;
}

}  // namespace qfano
