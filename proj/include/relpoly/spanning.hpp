#pragma once

#include <vector>

#include "relpoly/polynomial.hpp"

namespace relpoly {

// Coefficients of the spanning-subgraph basis: a polynomial written as
//   sum_{i=0..m} counts[i] * (1-q)^i * q^(m-i)
// where m is the edge count. For the reliability polynomial of a connected
// graph, counts[i] is the number of connected spanning subgraphs with i edges.
struct SpanningForm {
  long m = 0;
  std::vector<Rational> counts;  // size m+1

  SpanningForm() : counts(1, Rational(0)) {}
  SpanningForm(long m, std::vector<Rational> counts);
};

// Triangular exact solve: the basis {(1-q)^i q^(m-i)} spans all polynomials of
// degree <= m. Requires deg(p) <= m.
SpanningForm to_spanning_form(const Polynomial& p, long m);

Polynomial from_spanning_form(const SpanningForm& s);

// Derivative expressed in the same basis one degree down:
//   counts'[i] = (m-i)*counts[i] - (i+1)*counts[i+1].
// Expansion equals differentiate(from_spanning_form(s)). Requires m >= 1.
SpanningForm spanning_derivative(const SpanningForm& s);

}  // namespace relpoly
