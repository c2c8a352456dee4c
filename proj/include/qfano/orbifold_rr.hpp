#pragma once

#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "basket.hpp"
#include "error.hpp"
#include "rational.hpp"

namespace qfano {

// Fano index q with -K ~ qA, together with the basket of X.
struct PolarizedBasket {
  int q = 1;
  Basket basket;
};

// i in [0,r) with i == -t * q^{-1} (mod r), i.e. the local class of tA
// measured against K_X.
inline int local_index(int q, const BasketPoint& p, std::int64_t t) {
  if (std::gcd(q, p.r) != 1)
    throw Error(Errc::NoInverse, "gcd(q=" + std::to_string(q) + ", r=" + std::to_string(p.r) + ") != 1");
  return static_cast<int>(mod(-t * inverse_mod(q, p.r), p.r));
}

inline int local_index(const PolarizedBasket& pb, const BasketPoint& p, std::int64_t t) {
  return local_index(pb.q, p, t);
}

// c_P for a divisor of local index i at a point of type (r,b).
inline Rational local_contribution(const BasketPoint& p, int i) {
  const int r = p.r;
  Rational c = -frac(static_cast<std::int64_t>(i) * (r * r - 1), 12 * r);
  std::int64_t acc = 0;
  for (int j = 1; j < i; ++j) {
    std::int64_t ov = mod(static_cast<std::int64_t>(p.b) * j, r);
    acc += ov * (r - ov);
  }
  return c + frac(acc, 2 * r);
}

inline Rational c_contrib(const PolarizedBasket& pb, const BasketPoint& p, std::int64_t t) {
  return local_contribution(p, local_index(pb, p, t));
}

inline void require_large_index(int q) {
  if (q <= 2) throw Error(Errc::UnsupportedIndex, "q=" + std::to_string(q) + " needs q > 2");
}

// A^3 = 12/((q-1)(q-2)) * (1 - A.c2/12 + sum c_P(-A)),  A.c2 = kc2/q.
inline Rational a_cubed(const PolarizedBasket& pb) {
  require_large_index(pb.q);
  const int q = pb.q;
  Rational s = Rational(1) - kc2(pb.basket) / (12 * q);
  for (const auto& p : pb.basket) s += c_contrib(pb, p, -1);
  return frac(12, static_cast<std::int64_t>(q - 1) * (q - 2)) * s;
}

// Caches A^3 and -K.c2 so that chi can be evaluated at many t cheaply.
class RiemannRoch {
 public:
  explicit RiemannRoch(PolarizedBasket pb) : pb_(std::move(pb)) {
    require_large_index(pb_.q);
    a3_ = a_cubed(pb_);
    kc2_ = kc2(pb_.basket);
  }

  const PolarizedBasket& polarized() const { return pb_; }
  const Rational& a3() const { return a3_; }
  const Rational& kc2_value() const { return kc2_; }

  Rational chi(std::int64_t t) const {
    const std::int64_t q = pb_.q;
    Rational x = Rational(1) + frac(t * (q + t) * (q + 2 * t), 12) * a3_ + frac(t, 12 * q) * kc2_;
    for (const auto& p : pb_.basket) x += local_contribution(p, local_index(pb_, p, t));
    return x;
  }

  int dim(std::int64_t k) const {
    if (k <= -pb_.q) throw Error(Errc::Range, "dim|kA| needs k > -q");
    Rational c = chi(k);
    if (!is_integer(c))
      throw Error(Errc::Inconsistent, "chi(" + std::to_string(k) + "A) = " + to_string(c) + " is not an integer");
    return static_cast<int>(to_int(c)) - 1;
  }

 private:
  PolarizedBasket pb_;
  Rational a3_;
  Rational kc2_;
};

inline Rational chi(const PolarizedBasket& pb, std::int64_t t) { return RiemannRoch(pb).chi(t); }

// dim|kA| = chi(kA) - 1; -1 means the system is empty.
inline int dim_linear_system(const PolarizedBasket& pb, std::int64_t k) { return RiemannRoch(pb).dim(k); }

inline Rational triple_product(const PolarizedBasket& pb, std::int64_t k1, std::int64_t k2, std::int64_t k3) {
  return Rational(mpz_class(static_cast<long>(k1 * k2 * k3))) * a_cubed(pb);
}

}  // namespace qfano
