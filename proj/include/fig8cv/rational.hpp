// Arbitrary-precision rationals: thin helpers over GMP's mpq_class.
#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>

namespace fig8cv {

using Rational = mpq_class;
using Integer = mpz_class;

struct arithmetic_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw arithmetic_error("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline Rational make_rational(long num, long den = 1) {
  return make_rational(Integer(num), Integer(den));
}

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

// Exact square root: defined only when numerator and denominator are both
// perfect squares (denominator is positive in canonical form).
inline std::optional<Rational> rational_sqrt(const Rational& q) {
  if (q < 0) return std::nullopt;
  const Integer num = q.get_num(), den = q.get_den();
  if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t()))
    return std::nullopt;
  Integer rn, rd;
  mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
  return make_rational(rn, rd);
}

// Exact cube root (signs allowed since the exponent is odd).
inline std::optional<Rational> rational_cbrt(const Rational& q) {
  Integer num = q.get_num(), den = q.get_den();
  Integer rn, rd;
  const bool neg = num < 0;
  if (neg) num = -num;
  if (!mpz_root(rn.get_mpz_t(), num.get_mpz_t(), 3)) return std::nullopt;
  if (!mpz_root(rd.get_mpz_t(), den.get_mpz_t(), 3)) return std::nullopt;
  if (neg) rn = -rn;
  return make_rational(rn, rd);
}

inline Rational rational_pow(const Rational& q, unsigned long e) {
  Rational r = 1;
  Rational base = q;
  unsigned long k = e;
  while (k) {
    if (k & 1) r *= base;
    base *= base;
    k >>= 1;
  }
  return r;
}

inline std::string to_string(const Rational& q) { return q.get_str(); }

}  // namespace fig8cv
