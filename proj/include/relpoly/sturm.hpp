#pragma once

#include <utility>
#include <vector>

#include "relpoly/polynomial.hpp"

namespace relpoly {

// Signed remainder chain for root counting: element i+1 equals a positive
// multiple of -rem(element[i-1], element[i]). Built with subresultant scaling
// to keep integer coefficient growth polynomial; the sign of each scaling
// factor is tracked so the Sturm property survives the scaling.
struct SturmChain {
  std::vector<Polynomial> sequence;
};

SturmChain sturm_chain(const Polynomial& p);

// Sign variations of the chain evaluated at x (zeros skipped).
int sign_variations(const SturmChain& chain, const Rational& x);

// Thrown when a root-counting query is given an endpoint at which the
// polynomial vanishes; callers either strip the root or nudge the endpoint.
class endpoint_root_error : public std::domain_error {
 public:
  endpoint_root_error(const std::string& what, Rational endpoint)
      : std::domain_error(what), endpoint(std::move(endpoint)) {}
  Rational endpoint;
};

// Exact number of distinct real roots of p in the open interval (lo, hi).
// Requires p nonzero, lo < hi, p(lo) != 0 and p(hi) != 0.
long sturm_distinct_roots(const Polynomial& p, const Rational& lo, const Rational& hi);

// Last nonzero element of the subresultant remainder sequence, primitive with
// positive leading coefficient.
Polynomial poly_gcd(const Polynomial& a, const Polynomial& b);

// p / gcd(p, p'), normalized to integer coefficients with content 1 and
// positive leading coefficient. Rejects zero input.
Polynomial squarefree_part(const Polynomial& p);

struct IsolatingInterval {
  Rational lo;
  Rational hi;
};

// Pairwise disjoint open subintervals of (lo, hi), in increasing order, each
// containing exactly one root of the squarefree polynomial sf; together they
// cover every root of sf in (lo, hi). Requires sf(lo) != 0 and sf(hi) != 0.
std::vector<IsolatingInterval> isolate_distinct_roots(const Polynomial& sf, const Rational& lo,
                                                      const Rational& hi);

// Sign-change census of p on an open interval. sign_changes counts roots of
// odd multiplicity; touch_points are distinct roots of even multiplicity
// (no sign change). When p vanishes at a query endpoint the endpoint is
// nudged inward by a power of 1/2 past the bordering root, and the nudge is
// recorded in lo_used/hi_used.
struct InflectionReport {
  long sign_changes = 0;
  std::vector<IsolatingInterval> isolating_intervals;  // one per sign change
  long distinct_roots = 0;
  long touch_points = 0;
  Rational lo_used;
  Rational hi_used;
  bool lo_nudged = false;
  bool hi_nudged = false;
};

InflectionReport count_sign_changes(const Polynomial& p, const Rational& lo, const Rational& hi);

}  // namespace relpoly
