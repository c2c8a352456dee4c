#pragma once

#include <array>
#include <cstdint>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "basket.hpp"
#include "orbifold_rr.hpp"

namespace qfano {

struct WeightedProjectiveSpace {
  std::array<int, 4> weights{1, 1, 1, 1};

  int q() const { return weights[0] + weights[1] + weights[2] + weights[3]; }
  Rational a_cubed() const {
    std::int64_t p = 1;
    for (int w : weights) p *= w;
    return frac(1, p);
  }
  std::string to_string() const {
    std::string s;
    for (int w : weights) s += (s.empty() ? "" : ",") + std::to_string(w);
    return s;
  }
};

inline void validate(const WeightedProjectiveSpace& w) {
  for (int x : w.weights)
    if (x < 1) throw Error(Errc::Range, "weights must be positive");
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (std::gcd(w.weights[i], w.weights[j]) != 1)
        throw Error(Errc::Unsupported, "weights " + w.to_string() + " are not pairwise coprime");
}

inline WeightedProjectiveSpace parse_weights(const std::string& text) {
  WeightedProjectiveSpace w;
  std::stringstream ss(text);
  std::string item;
  std::vector<int> ws;
  while (std::getline(ss, item, ',')) ws.push_back(parse_int(item));
  if (ws.size() != 4 || text.empty() || text.back() == ',')
    throw Error(Errc::Parse, "expected four comma-separated weights, got '" + text + "'");
  for (int i = 0; i < 4; ++i) w.weights[i] = ws[i];
  return w;
}

// Normalizes each 1/w_i(w_j,w_k,w_l) to the form 1/r(1,-1,b).
inline Basket wps_basket(const WeightedProjectiveSpace& w) {
  validate(w);
  std::vector<BasketPoint> pts;
  for (int i = 0; i < 4; ++i) {
    const int r = w.weights[i];
    if (r == 1) continue;
    std::vector<int> other;
    for (int j = 0; j < 4; ++j)
      if (j != i) other.push_back(w.weights[j] % r);
    bool found = false;
    for (int u = 1; u < r && !found; ++u) {
      if (std::gcd(u, r) != 1) continue;
      std::array<int, 3> v{};
      for (int j = 0; j < 3; ++j) v[j] = static_cast<int>(mod(static_cast<std::int64_t>(other[j]) * u, r));
      for (int a = 0; a < 3 && !found; ++a)
        for (int c = 0; c < 3 && !found; ++c) {
          if (a == c || v[a] != 1 || v[c] != r - 1) continue;
          int b = v[3 - a - c];
          pts.push_back(make_point(r, b));
          found = true;
        }
    }
    if (!found) throw Error(Errc::NonTerminal, "point of index " + std::to_string(r) + " on P(" + w.to_string() + ") is not terminal");
  }
  return Basket(std::move(pts));
}

// Hilbert function h(k) for 0 <= k <= k_max.
inline std::vector<std::int64_t> hilbert_function(const WeightedProjectiveSpace& w, int k_max) {
  std::vector<std::int64_t> c(static_cast<std::size_t>(std::max(k_max, 0)) + 1, 0);
  c[0] = 1;
  for (int x : w.weights)
    for (int d = x; d <= k_max; ++d) c[d] += c[d - x];
  return c;
}

inline std::int64_t monomial_count(const WeightedProjectiveSpace& w, int k) {
  if (k < 0) throw Error(Errc::Range, "degree must be nonnegative");
  return hilbert_function(w, k)[k];
}

// sum_k h(k) s^k * prod (1 - s^w_i) == 1 modulo s^(k_max+1).
inline bool hilbert_series_identity(const WeightedProjectiveSpace& w, int k_max) {
  auto h = hilbert_function(w, k_max);
  std::vector<std::int64_t> poly = h;
  for (int x : w.weights) {
    std::vector<std::int64_t> next = poly;
    for (int d = x; d <= k_max; ++d) next[d] -= poly[d - x];
    poly.swap(next);
  }
  for (int d = 0; d <= k_max; ++d)
    if (poly[d] != (d == 0 ? 1 : 0)) return false;
  return true;
}

struct OracleRow {
  int k = 0;
  Rational chi;
  std::int64_t count = 0;
  bool match = false;
};

struct OracleReport {
  WeightedProjectiveSpace space;
  Basket basket;
  Rational a_cubed;
  Rational expected_a_cubed;
  std::vector<OracleRow> rows;
  std::vector<int> mismatches;  // degrees k with chi(k) != h(k)

  bool a_cubed_match() const { return a_cubed == expected_a_cubed; }
  bool ok() const { return mismatches.empty() && a_cubed_match(); }
};

inline OracleReport oracle_compare(const WeightedProjectiveSpace& w, int k_max) {
  if (k_max < 0) throw Error(Errc::Range, "k_max must be nonnegative");
  OracleReport rep;
  rep.space = w;
  rep.basket = wps_basket(w);
  RiemannRoch rr(PolarizedBasket{w.q(), rep.basket});
  rep.a_cubed = rr.a3();
  rep.expected_a_cubed = w.a_cubed();
  auto h = hilbert_function(w, k_max);
  for (int k = 0; k <= k_max; ++k) {
    OracleRow row{k, rr.chi(k), h[k], false};
    row.match = row.chi == Rational(mpz_class(static_cast<long>(row.count)));
    if (!row.match) rep.mismatches.push_back(k);
    rep.rows.push_back(std::move(row));
  }
  return rep;
}

// The toric Q-Fano threefolds with terminal singularities and Picard rank one
// whose weights are pairwise coprime.
inline std::vector<WeightedProjectiveSpace> toric_spaces() {
  return {{{1, 1, 1, 1}}, {{1, 1, 1, 2}}, {{1, 1, 2, 3}}, {{1, 2, 3, 5}},
          {{1, 3, 4, 5}}, {{2, 3, 5, 7}}, {{3, 4, 5, 7}}};
}

}  // namespace qfano
