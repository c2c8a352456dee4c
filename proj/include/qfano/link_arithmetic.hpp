#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "basket.hpp"
#include "rational.hpp"

namespace qfano {

// l in [1,r) with q*l == 1 (mod r); near a point of index r, A ~ -l K.
inline int weil_multiplier(int q, int r) {
  if (r < 2) throw Error(Errc::Range, "index must be >= 2");
  return static_cast<int>(inverse_mod(q, r));
}

// Kawamata blowup of the point P_r of the source X.
struct LinkContext {
  int q = 0;
  Basket basket;
  int r = 2;
  Rational alpha;  // discrepancy 1/r
  int l_r = 1;
  std::vector<int> degrees;
};

inline LinkContext make_link_context(int q, const Basket& basket, int r, std::vector<int> degrees = {}) {
  auto idx = basket.indices();
  if (std::find(idx.begin(), idx.end(), r) == idx.end())
    throw Error(Errc::NotFound, "no point of index " + std::to_string(r) + " in " + to_string(basket));
  return LinkContext{q, basket, r, frac(1, r), weil_multiplier(q, r), std::move(degrees)};
}

// beta_k = k*l_r/r + m_k; this is the fractional part.
inline Rational beta_fraction(const LinkContext& ctx, std::int64_t k) {
  return frac(mod(k * ctx.l_r, ctx.r), ctx.r);
}

// c <= 1/m with m = degree*l_r mod r.
inline Rational threshold_bound(const LinkContext& ctx, std::int64_t degree) {
  std::int64_t m = mod(degree * ctx.l_r, ctx.r);
  if (m == 0)
    throw Error(Errc::CartierAtPoint, "|" + std::to_string(degree) + "A| is Cartier at the index-" +
                                          std::to_string(ctx.r) + " point");
  return frac(1, m);
}

// Solves sum c_k beta_k = a + alpha for given m_k (missing m_k count as 0).
inline std::int64_t a_coefficient(const LinkContext& ctx, const std::map<int, std::int64_t>& coeffs,
                                  const std::map<int, std::int64_t>& m_values = {}) {
  Rational s = -ctx.alpha;
  for (const auto& [k, c] : coeffs) {
    auto it = m_values.find(k);
    std::int64_t m = it == m_values.end() ? 0 : it->second;
    s += Rational(mpz_class(static_cast<long>(c))) * (beta_fraction(ctx, k) + Rational(mpz_class(static_cast<long>(m))));
  }
  if (!is_integer(s))
    throw Error(Errc::InconsistentRelation, "sum c_k beta_k - alpha = " + to_string(s) + " is not an integer");
  return to_int(s);
}

// Smallest m with mA Cartier at the points of the given indices.
inline std::int64_t cartier_multiple(const Basket& basket, const std::set<int>& indices) {
  auto idx = basket.indices();
  std::int64_t l = 1;
  for (int r : indices) {
    if (std::find(idx.begin(), idx.end(), r) == idx.end())
      throw Error(Errc::NotFound, "no point of index " + std::to_string(r) + " in " + to_string(basket));
    l = std::lcm(l, static_cast<std::int64_t>(r));
  }
  return l;
}

}  // namespace qfano
