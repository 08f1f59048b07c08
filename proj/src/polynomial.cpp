#include "relpoly/polynomial.hpp"

#include <sstream>

namespace relpoly {

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Polynomial::Polynomial(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  trim();
}

Polynomial Polynomial::constant(const Rational& c) {
  return Polynomial(std::vector<Rational>{c});
}

Polynomial Polynomial::monomial(std::size_t degree, const Rational& c) {
  std::vector<Rational> v(degree + 1, Rational(0));
  v[degree] = c;
  return Polynomial(std::move(v));
}

Polynomial Polynomial::variable() { return monomial(1, Rational(1)); }

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const Rational& Polynomial::coeff(std::size_t i) const {
  static const Rational zero(0);
  return i < coeffs_.size() ? coeffs_[i] : zero;
}

const Rational& Polynomial::leading() const {
  if (coeffs_.empty()) throw std::logic_error("leading(): zero polynomial");
  return coeffs_.back();
}

Polynomial Polynomial::operator-() const {
  Polynomial r(*this);
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), Rational(0));
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), Rational(0));
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs) {
  if (lhs.is_zero() || rhs.is_zero()) return Polynomial();
  std::vector<Rational> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
    if (lhs.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
      if (rhs.coeffs_[j] == 0) continue;
      out[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
    }
  }
  return Polynomial(std::move(out));
}

Polynomial operator*(const Rational& s, const Polynomial& p) {
  if (s == 0) return Polynomial();
  Polynomial r(p);
  for (auto& c : r.coeffs_) c *= s;
  return r;
}

std::string Polynomial::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const Rational& c = coeffs_[i];
    if (c == 0) continue;
    Rational mag = abs(c);
    if (first) {
      if (c < 0) out << "-";
      first = false;
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    bool unit = mag == 1;
    bool integral = mag.get_den() == 1;
    if (i == 0) {
      out << mag.get_str();
    } else {
      if (!unit) {
        if (integral)
          out << mag.get_str();
        else
          out << "(" << mag.get_str() << ")";
      }
      out << var;
      if (i > 1) out << "^" << i;
    }
  }
  return out.str();
}

Polynomial differentiate(const Polynomial& p) {
  if (p.degree() <= 0) return Polynomial();
  std::vector<Rational> out(p.degree());
  for (long i = 1; i <= p.degree(); ++i) out[i - 1] = Rational(i) * p.coeff(i);
  return Polynomial(std::move(out));
}

Rational evaluate_exact(const Polynomial& p, const Rational& q) {
  Rational acc(0);
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) acc = acc * q + *it;
  return acc;
}

Polynomial poly_pow(const Polynomial& p, const Integer& exponent, long degree_ceiling) {
  if (exponent < 0) throw std::invalid_argument("poly_pow: negative exponent");
  if (exponent == 0) return Polynomial::constant(Rational(1));
  if (p.is_zero()) return Polynomial();
  Integer required = exponent * p.degree();
  if (required > degree_ceiling)
    throw degree_limit_error("poly_pow: degree " + required.get_str() + " exceeds ceiling " +
                                 std::to_string(degree_ceiling),
                             required, degree_ceiling);
  unsigned long e = exponent.get_ui();
  Polynomial base = p;
  Polynomial acc = Polynomial::constant(Rational(1));
  while (e > 0) {
    if (e & 1) acc = acc * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return acc;
}

DivMod divmod(const Polynomial& p, const Polynomial& d) {
  if (d.is_zero()) throw std::invalid_argument("divmod: division by zero polynomial");
  if (p.degree() < d.degree()) return {Polynomial(), p};
  std::vector<Rational> rem(p.coeffs());
  std::vector<Rational> quot(p.degree() - d.degree() + 1, Rational(0));
  const Rational& lead = d.leading();
  for (long i = p.degree(); i >= d.degree(); --i) {
    Rational c = rem[i] / lead;
    if (c == 0) continue;
    quot[i - d.degree()] = c;
    for (long j = 0; j <= d.degree(); ++j) rem[i - d.degree() + j] -= c * d.coeff(j);
  }
  return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

Polynomial exact_div(const Polynomial& p, const Polynomial& d) {
  DivMod dm = divmod(p, d);
  if (!dm.rem.is_zero()) throw std::logic_error("exact_div: nonzero remainder");
  return dm.quot;
}

std::vector<Integer> primitive_integer_coeffs(const Polynomial& p) {
  if (p.is_zero()) return {};
  Integer den_lcm(1);
  for (const auto& c : p.coeffs()) {
    Integer g;
    mpz_lcm(g.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
    den_lcm = g;
  }
  std::vector<Integer> out;
  out.reserve(p.coeffs().size());
  Integer content(0);
  for (const auto& c : p.coeffs()) {
    Integer v = c.get_num() * (den_lcm / c.get_den());
    Integer g;
    mpz_gcd(g.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
    content = g;
    out.push_back(std::move(v));
  }
  for (auto& v : out) v /= content;  // content > 0: gcd of not-all-zero values
  return out;
}

}  // namespace relpoly
