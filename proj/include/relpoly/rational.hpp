#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace relpoly {

using Integer = mpz_class;
using Rational = mpq_class;

// Canonicalized rational from parts. Throws on zero denominator.
Rational ratio(const Integer& num, const Integer& den);
inline Rational ratio(long num, long den) { return ratio(Integer(num), Integer(den)); }

// Parses "3", "-3/4", "0.125" (decimal converted exactly via a power-of-ten
// denominator, never through binary floating point). Digit-group commas are
// stripped, so "100,000,000" is accepted.
Rational parse_rational(const std::string& text);

Integer parse_integer(const std::string& text);

// Fixed-point decimal rendering with `digits` digits after the point,
// rounded half away from zero. Locale independent: '.' separator, no grouping.
std::string decimal_string(const Rational& value, std::size_t digits);

inline int sign(const Rational& x) { return sgn(x); }
inline int sign(const Integer& x) { return sgn(x); }

inline Integer binomial(unsigned long n, unsigned long k) {
  Integer r;
  if (k > n) return Integer(0);
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

inline Integer int_pow(const Integer& base, unsigned long e) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

Rational rational_pow(const Rational& base, long e);

}  // namespace relpoly
