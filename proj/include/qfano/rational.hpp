#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <numeric>
#include <string>
#include <tuple>
#include <utility>

#include "error.hpp"

namespace qfano {

using Rational = mpq_class;

inline Rational frac(std::int64_t num, std::int64_t den = 1) {
  Rational x(mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den)));
  x.canonicalize();
  return x;
}

inline bool is_integer(const Rational& x) { return x.get_den() == 1; }

// Caller must check is_integer first.
inline std::int64_t to_int(const Rational& x) { return x.get_num().get_si(); }

inline mpz_class floor_of(const Rational& x) {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return q;
}

inline mpz_class ceil_of(const Rational& x) {
  mpz_class q;
  mpz_cdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return q;
}

// Fractional part in [0,1).
inline Rational frac_part(const Rational& x) { return x - Rational(floor_of(x)); }

// "p/q", or "p" when the denominator is 1.
inline std::string to_string(const Rational& x) { return x.get_str(10); }

inline Rational parse_rational(const std::string& s) {
  Rational x;
  if (s.empty() || x.set_str(s, 10) != 0 || x.get_den() == 0)
    throw Error(Errc::Parse, "bad rational '" + s + "'");
  x.canonicalize();
  return x;
}

inline std::int64_t mod(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

// Inverse of a modulo m in [0,m).
inline std::int64_t inverse_mod(std::int64_t a, std::int64_t m) {
  if (m == 1) return 0;
  std::int64_t g = m, x = 0, x1 = 1, a1 = mod(a, m);
  while (a1 != 0) {
    std::int64_t t = g / a1;
    std::tie(g, a1) = std::make_pair(a1, g - t * a1);
    std::tie(x, x1) = std::make_pair(x1, x - t * x1);
  }
  if (g != 1)
    throw Error(Errc::NoInverse, std::to_string(a) + " is not invertible mod " + std::to_string(m));
  return mod(x, m);
}

}  // namespace qfano
