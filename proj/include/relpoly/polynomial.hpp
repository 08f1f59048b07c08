#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "relpoly/rational.hpp"

namespace relpoly {

// Dense univariate polynomial in q over exact rationals. Coefficient i is the
// coefficient of q^i; trailing zeros are trimmed, so the zero polynomial has an
// empty coefficient list and degree() == -1.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs);
  Polynomial(std::initializer_list<long> coeffs);

  static Polynomial constant(const Rational& c);
  static Polynomial monomial(std::size_t degree, const Rational& c);
  // q itself
  static Polynomial variable();

  bool is_zero() const { return coeffs_.empty(); }
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  // zero beyond the stored range
  const Rational& coeff(std::size_t i) const;
  const Rational& leading() const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  friend Polynomial operator+(Polynomial lhs, const Polynomial& rhs) { return lhs += rhs; }
  friend Polynomial operator-(Polynomial lhs, const Polynomial& rhs) { return lhs -= rhs; }
  friend Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs);
  friend Polynomial operator*(const Rational& s, const Polynomial& p);
  friend bool operator==(const Polynomial& lhs, const Polynomial& rhs) = default;

  std::string to_string(const std::string& var = "q") const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

Polynomial differentiate(const Polynomial& p);

Rational evaluate_exact(const Polynomial& p, const Rational& q);

// Signals that a requested expansion would exceed the configured degree
// ceiling; callers with huge exponents should switch to the log-derivative
// representation instead of expanding.
class degree_limit_error : public std::domain_error {
 public:
  degree_limit_error(const std::string& what, const Integer& required, long ceiling)
      : std::domain_error(what), required_degree(required), ceiling(ceiling) {}
  Integer required_degree;
  long ceiling;
};

inline constexpr long kDefaultDegreeCeiling = 20000;

// Exact power via repeated squaring. Refuses when exponent*deg(p) exceeds the
// ceiling.
Polynomial poly_pow(const Polynomial& p, const Integer& exponent,
                    long degree_ceiling = kDefaultDegreeCeiling);

// Euclidean division over Q: p = quot*d + rem with deg(rem) < deg(d).
struct DivMod {
  Polynomial quot;
  Polynomial rem;
};
DivMod divmod(const Polynomial& p, const Polynomial& d);

// Division known to be exact; throws std::logic_error on a nonzero remainder.
Polynomial exact_div(const Polynomial& p, const Polynomial& d);

// Integer-coefficient image of p: returns coefficient vector of lambda*p for
// the unique lambda > 0 making the coefficients integral with content 1.
std::vector<Integer> primitive_integer_coeffs(const Polynomial& p);

}  // namespace relpoly
