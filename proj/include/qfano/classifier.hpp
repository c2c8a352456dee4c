#pragma once

#include <algorithm>
#include <cstdint>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

#include "basket.hpp"
#include "orbifold_rr.hpp"
#include "torsion.hpp"

namespace qfano {

inline constexpr int kFanoIndices[] = {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 13, 17, 19};

inline bool is_fano_index(int q) {
  return std::find(std::begin(kFanoIndices), std::end(kFanoIndices), q) != std::end(kFanoIndices);
}

struct FilterSet {
  bool coprime = true;
  bool positive_degree = true;
  bool integrality = true;
  bool degree_bound = true;
  bool vanishing = true;
  bool suzuki = false;
  bool torsion_free = false;

  static FilterSet defaults() { return FilterSet{}; }
  static FilterSet none() { return FilterSet{false, false, false, false, false, false, false}; }

  std::vector<std::string> names() const {
    std::vector<std::string> out;
    if (coprime) out.push_back("coprime");
    if (positive_degree) out.push_back("positive_degree");
    if (integrality) out.push_back("integrality");
    if (degree_bound) out.push_back("degree_bound");
    if (vanishing) out.push_back("vanishing");
    if (suzuki) out.push_back("suzuki");
    if (torsion_free) out.push_back("torsion_free");
    return out;
  }

  // Every filter on in *this is also on in o.
  bool subset_of(const FilterSet& o) const {
    return (!coprime || o.coprime) && (!positive_degree || o.positive_degree) &&
           (!integrality || o.integrality) && (!degree_bound || o.degree_bound) &&
           (!vanishing || o.vanishing) && (!suzuki || o.suzuki) && (!torsion_free || o.torsion_free);
  }
};

struct FanoCandidate {
  int q = 0;
  Basket basket;
  Rational a_cubed;
  Rational kc2;
  // dims[k-1] = dim|kA| for k = 1..max(q,7); -2 marks a non-integral chi,
  // which only happens with the vanishing filter off.
  std::vector<int> dims;
  bool torsion_free = false;
  std::vector<std::string> filters_applied;

  int dim(int k) const { return dims.at(static_cast<std::size_t>(k - 1)); }
  int dim_minus_k() const { return dim(q); }

  bool operator<(const FanoCandidate& o) const {
    if (q != o.q) return q < o.q;
    return basket < o.basket;
  }
};

namespace detail {

inline bool vanishing_ok(const RiemannRoch& rr) {
  const int q = rr.polarized().q;
  for (int t = -q + 1; t < 0; ++t)
    if (rr.chi(t) != 0) return false;
  for (int t = 1; t <= 2 * q; ++t) {
    Rational c = rr.chi(t);
    if (!is_integer(c) || c < 0) return false;
  }
  return true;
}

inline bool suzuki_ok(const RiemannRoch& rr) {
  const std::int64_t q = rr.polarized().q;
  return Rational(mpz_class(static_cast<long>(4 * q * q - 3 * q))) * rr.a3() <= 4 * rr.kc2_value();
}

}  // namespace detail

// chi(tA) = 0 for -q < t < 0, chi(tA) a nonnegative integer for 0 < t <= 2q.
inline bool check_vanishing(const PolarizedBasket& pb) { return detail::vanishing_ok(RiemannRoch(pb)); }

inline bool suzuki_filter(const PolarizedBasket& pb) { return detail::suzuki_ok(RiemannRoch(pb)); }

// Runs the filters in order; returns false as soon as one rejects.
inline bool evaluate_candidate(int q, const Basket& basket, const FilterSet& f, FanoCandidate* out) {
  std::int64_t g = gorenstein_index(basket);
  // Local indices are undefined without coprimality, so this one always runs.
  if (std::gcd(static_cast<std::int64_t>(q), g) != 1) return false;
  RiemannRoch rr(PolarizedBasket{q, basket});
  const Rational& a3 = rr.a3();
  if (f.positive_degree && a3 <= 0) return false;
  if (f.integrality && !is_integer(a3 * Rational(mpz_class(static_cast<long>(g))))) return false;
  // The degree bound only holds for q >= 5; P^3 has -K^3 = 64.
  if (f.degree_bound && q >= 5 && Rational(q * q * q) * a3 > frac(125, 2)) return false;
  if (f.vanishing && !detail::vanishing_ok(rr)) return false;
  if (f.suzuki && !detail::suzuki_ok(rr)) return false;
  bool tf = torsion_free(basket);
  if (f.torsion_free && !tf) return false;
  if (out) {
    out->q = q;
    out->basket = basket;
    out->a_cubed = a3;
    out->kc2 = rr.kc2_value();
    out->dims.clear();
    for (int k = 1; k <= std::max(q, 7); ++k) {
      Rational c = rr.chi(k);
      out->dims.push_back(is_integer(c) ? static_cast<int>(to_int(c)) - 1 : -2);
    }
    out->torsion_free = tf;
    out->filters_applied = f.names();
  }
  return true;
}

struct ClassifyOptions {
  Rational max_weight = 24;
  unsigned workers = 1;
};

// Candidates for q in [q_min, q_max] intersected with the admissible Fano
// indices, sorted by q then basket.
inline std::vector<FanoCandidate> classify(int q_min, int q_max, const FilterSet& filters = {},
                                           const ClassifyOptions& opt = {}) {
  if (q_min < 3 || q_max > 19 || q_min > q_max)
    throw Error(Errc::Range, "classify needs 3 <= q_min <= q_max <= 19");
  std::vector<int> qs;
  for (int q = q_min; q <= q_max; ++q)
    if (is_fano_index(q)) qs.push_back(q);

  const std::size_t parts = basket_partition_count(opt.max_weight);
  std::vector<FanoCandidate> out;
  std::mutex mu;
  auto work = [&](std::size_t part) {
    std::vector<FanoCandidate> local;
    for_each_basket_in_partition(opt.max_weight, part, [&](const Basket& b) {
      for (int q : qs) {
        FanoCandidate c;
        if (evaluate_candidate(q, b, filters, &c)) local.push_back(std::move(c));
      }
    });
    std::lock_guard<std::mutex> lock(mu);
    for (auto& c : local) out.push_back(std::move(c));
  };

  unsigned workers = std::max(1u, opt.workers);
  if (workers == 1) {
    for (std::size_t p = 0; p < parts; ++p) work(p);
  } else {
    std::vector<std::thread> pool;
    std::size_t next = 0;
    std::mutex next_mu;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (;;) {
          std::size_t p;
          {
            std::lock_guard<std::mutex> lock(next_mu);
            if (next >= parts) return;
            p = next++;
          }
          work(p);
        }
      });
    }
    for (auto& t : pool) t.join();
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Candidates with q >= q_floor and dim|A| >= dim_a_floor.
inline std::vector<FanoCandidate> special_search(int q_floor, int dim_a_floor, const ClassifyOptions& opt = {}) {
  if (q_floor < 5) throw Error(Errc::Range, "special search needs q_floor >= 5");
  std::vector<FanoCandidate> out;
  if (q_floor > 19) return out;
  for (auto& c : classify(q_floor, 19, FilterSet::defaults(), opt))
    if (c.dim(1) >= dim_a_floor) out.push_back(std::move(c));
  return out;
}

// Sorted index multisets per q.
inline std::vector<std::pair<int, std::vector<int>>> index_projection(const std::vector<FanoCandidate>& cs) {
  std::vector<std::pair<int, std::vector<int>>> out;
  for (const auto& c : cs) {
    std::pair<int, std::vector<int>> key{c.q, c.basket.indices()};
    if (std::find(out.begin(), out.end(), key) == out.end()) out.push_back(std::move(key));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace qfano
