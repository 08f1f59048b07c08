#include "relpoly/spanning.hpp"

namespace relpoly {

SpanningForm::SpanningForm(long m, std::vector<Rational> counts_in)
    : m(m), counts(std::move(counts_in)) {
  if (m < 0) throw std::invalid_argument("SpanningForm: negative edge count");
  if (counts.size() != static_cast<std::size_t>(m) + 1)
    throw std::invalid_argument("SpanningForm: need exactly m+1 counts");
}

namespace {

// (1-q)^i as a polynomial
Polynomial one_minus_q_pow(long i) {
  Polynomial base({1, -1});
  Polynomial acc = Polynomial::constant(Rational(1));
  for (long k = 0; k < i; ++k) acc = acc * base;
  return acc;
}

}  // namespace

Polynomial from_spanning_form(const SpanningForm& s) {
  Polynomial acc;
  Polynomial b = Polynomial::constant(Rational(1));  // (1-q)^i, built incrementally
  const Polynomial one_minus_q({1, -1});
  for (long i = 0; i <= s.m; ++i) {
    if (s.counts[i] != 0)
      acc += s.counts[i] * (b * Polynomial::monomial(s.m - i, Rational(1)));
    if (i < s.m) b = b * one_minus_q;
  }
  return acc;
}

SpanningForm to_spanning_form(const Polynomial& p, long m) {
  if (p.degree() > m)
    throw std::invalid_argument("to_spanning_form: deg(p) > m");
  std::vector<Rational> counts(m + 1, Rational(0));
  // Back-substitution from the low end: the basis element (1-q)^i q^(m-i) has
  // lowest term q^(m-i) with coefficient 1, so matching the coefficient of q^k
  // pins counts[m-k] once higher-index counts are known.
  Polynomial residue = p;
  Polynomial b = one_minus_q_pow(m);  // (1-q)^(m-k), stepped down by exact division
  const Polynomial one_minus_q({1, -1});
  for (long k = 0; k <= m; ++k) {
    const Rational& c = residue.coeff(k);
    if (c != 0) {
      counts[m - k] = c;
      residue -= c * (b * Polynomial::monomial(k, Rational(1)));
    }
    if (k < m) b = exact_div(b, one_minus_q);
  }
  if (!residue.is_zero()) throw std::logic_error("to_spanning_form: nonzero residue");
  return SpanningForm(m, std::move(counts));
}

SpanningForm spanning_derivative(const SpanningForm& s) {
  if (s.m < 1) throw std::invalid_argument("spanning_derivative: m must be >= 1");
  std::vector<Rational> out(s.m, Rational(0));
  for (long i = 0; i < s.m; ++i)
    out[i] = Rational(s.m - i) * s.counts[i] - Rational(i + 1) * s.counts[i + 1];
  return SpanningForm(s.m - 1, std::move(out));
}

}  // namespace relpoly
