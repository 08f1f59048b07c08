#include "relpoly/sturm.hpp"

#include <algorithm>

namespace relpoly {

namespace {

// Integer-coefficient polynomials for the remainder sequence.
using IVec = std::vector<Integer>;

long ideg(const IVec& v) { return static_cast<long>(v.size()) - 1; }

void itrim(IVec& v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
}

IVec iderivative(const IVec& v) {
  if (v.size() <= 1) return {};
  IVec out(v.size() - 1);
  for (std::size_t i = 1; i < v.size(); ++i) out[i - 1] = Integer(i) * v[i];
  return out;
}

Integer icontent(const IVec& v) {
  Integer c(0);
  for (const auto& x : v) {
    Integer g;
    mpz_gcd(g.get_mpz_t(), c.get_mpz_t(), x.get_mpz_t());
    c = g;
  }
  return c;
}

void idiv_scalar(IVec& v, const Integer& d) {
  for (auto& x : v) {
    Integer q;
    mpz_divexact(q.get_mpz_t(), x.get_mpz_t(), d.get_mpz_t());
    x = q;
  }
}

void imake_primitive(IVec& v) {
  if (v.empty()) return;
  Integer c = icontent(v);
  if (c != 1) idiv_scalar(v, c);
}

// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a mod b, exactly.
IVec iprem(const IVec& a, const IVec& b) {
  IVec r = a;
  const Integer& d = b.back();
  long db = ideg(b);
  long e = ideg(a) - db + 1;
  while (!r.empty() && ideg(r) >= db) {
    Integer s = r.back();
    long shift = ideg(r) - db;
    IVec next(r.size() - 1);
    for (long i = 0; i < ideg(r); ++i) {
      next[i] = d * r[i];
      if (i >= shift) next[i] -= s * b[i - shift];
    }
    itrim(next);
    r = std::move(next);
    --e;
  }
  if (e > 0 && !r.empty()) {
    Integer f = int_pow(d, static_cast<unsigned long>(e));
    for (auto& x : r) x *= f;
  }
  return r;
}

Polynomial ivec_to_poly(const IVec& v) {
  std::vector<Rational> c;
  c.reserve(v.size());
  for (const auto& x : v) c.emplace_back(x);
  return Polynomial(std::move(c));
}

IVec poly_to_primitive_ivec(const Polynomial& p) {
  return primitive_integer_coeffs(p);
}

// Subresultant remainder sequence of (a, b) over Z. When track_signs, each
// stored element is flipped so that element i+1 is a positive multiple of
// -rem(element[i-1], element[i]); otherwise elements are stored as produced.
std::vector<IVec> subresultant_prs(IVec a, IVec b, bool track_signs) {
  std::vector<IVec> out;
  out.push_back(a);
  if (b.empty()) return out;
  out.push_back(b);

  Integer g(1), h(1);
  int sigma_prev = 1, sigma_cur = 1;
  while (true) {
    long delta = ideg(a) - ideg(b);
    Integer lcb = b.back();
    IVec r = iprem(a, b);
    if (r.empty()) break;
    Integer divisor = g * int_pow(h, static_cast<unsigned long>(delta));
    idiv_scalar(r, divisor);

    int sigma_next = 1;
    if (track_signs) {
      int s_kappa = sign(lcb);
      if ((delta + 1) % 2 == 0) s_kappa = 1;  // even power
      s_kappa *= sign(divisor);
      sigma_next = -sigma_prev * s_kappa;
    }
    IVec stored = r;
    if (sigma_next < 0)
      for (auto& x : stored) x = -x;
    out.push_back(std::move(stored));

    a = std::move(b);
    b = std::move(r);
    sigma_prev = sigma_cur;
    sigma_cur = sigma_next;
    g = a.back();
    // h = g^delta * h^(1-delta), exact per the subresultant theory
    if (delta == 0) {
      // degrees strictly decrease after the first pair, so delta >= 1 there;
      // delta == 0 can only happen on a malformed first pair
      h = Integer(1);
    } else {
      Integer num = int_pow(g, static_cast<unsigned long>(delta));
      if (delta > 1) {
        Integer den = int_pow(h, static_cast<unsigned long>(delta - 1));
        Integer q;
        mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
        h = q;
      } else {
        h = num;
      }
    }
  }
  return out;
}

int eval_sign(const Polynomial& p, const Rational& x) { return sign(evaluate_exact(p, x)); }

}  // namespace

SturmChain sturm_chain(const Polynomial& p) {
  if (p.is_zero()) throw std::invalid_argument("sturm_chain: zero polynomial");
  IVec p0 = poly_to_primitive_ivec(p);
  IVec p1 = iderivative(p0);
  imake_primitive(p1);
  SturmChain chain;
  if (p1.empty()) {
    chain.sequence.push_back(ivec_to_poly(p0));
    return chain;
  }
  auto prs = subresultant_prs(std::move(p0), std::move(p1), /*track_signs=*/true);
  chain.sequence.reserve(prs.size());
  for (const auto& v : prs) chain.sequence.push_back(ivec_to_poly(v));
  return chain;
}

int sign_variations(const SturmChain& chain, const Rational& x) {
  int variations = 0;
  int prev = 0;
  for (const auto& p : chain.sequence) {
    int s = eval_sign(p, x);
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++variations;
    prev = s;
  }
  return variations;
}

namespace {

long chain_root_count(const SturmChain& chain, const Rational& lo, const Rational& hi) {
  return sign_variations(chain, lo) - sign_variations(chain, hi);
}

}  // namespace

long sturm_distinct_roots(const Polynomial& p, const Rational& lo, const Rational& hi) {
  if (p.is_zero()) throw std::invalid_argument("sturm_distinct_roots: zero polynomial");
  if (!(lo < hi)) throw std::invalid_argument("sturm_distinct_roots: need lo < hi");
  if (eval_sign(p, lo) == 0)
    throw endpoint_root_error("sturm_distinct_roots: p vanishes at lower endpoint", lo);
  if (eval_sign(p, hi) == 0)
    throw endpoint_root_error("sturm_distinct_roots: p vanishes at upper endpoint", hi);
  SturmChain chain = sturm_chain(p);
  return chain_root_count(chain, lo, hi);
}

Polynomial poly_gcd(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() && b.is_zero()) throw std::invalid_argument("poly_gcd: both inputs zero");
  if (a.is_zero() || b.is_zero()) {
    IVec v = poly_to_primitive_ivec(a.is_zero() ? b : a);
    if (v.back() < 0)
      for (auto& x : v) x = -x;
    return ivec_to_poly(v);
  }
  IVec pa = poly_to_primitive_ivec(a);
  IVec pb = poly_to_primitive_ivec(b);
  if (ideg(pa) < ideg(pb)) std::swap(pa, pb);
  auto prs = subresultant_prs(std::move(pa), std::move(pb), /*track_signs=*/false);
  IVec g = prs.back();
  imake_primitive(g);
  if (g.back() < 0)
    for (auto& x : g) x = -x;
  return ivec_to_poly(g);
}

Polynomial squarefree_part(const Polynomial& p) {
  if (p.is_zero()) throw std::invalid_argument("squarefree_part: zero polynomial");
  if (p.degree() == 0) return Polynomial::constant(Rational(1));
  Polynomial g = poly_gcd(p, differentiate(p));
  Polynomial sf = g.degree() == 0 ? p : exact_div(p, g);
  IVec v = poly_to_primitive_ivec(sf);
  if (v.back() < 0)
    for (auto& x : v) x = -x;
  return ivec_to_poly(v);
}

namespace {

void isolate_rec(const SturmChain& chain, const Polynomial& sf, const Rational& lo,
                 const Rational& hi, long count, std::vector<IsolatingInterval>& out) {
  if (count == 0) return;
  if (count == 1) {
    out.push_back({lo, hi});
    return;
  }
  Rational mid = (lo + hi) / 2;
  if (eval_sign(sf, mid) != 0) {
    long left = chain_root_count(chain, lo, mid);
    isolate_rec(chain, sf, lo, mid, left, out);
    isolate_rec(chain, sf, mid, hi, count - left, out);
    return;
  }
  // The midpoint is itself a root: bracket it, then recurse on both sides.
  Rational delta = (hi - lo) / 4;
  while (eval_sign(sf, mid - delta) == 0 || eval_sign(sf, mid + delta) == 0 ||
         chain_root_count(chain, mid - delta, mid + delta) != 1)
    delta /= 2;
  long left = chain_root_count(chain, lo, mid - delta);
  isolate_rec(chain, sf, lo, mid - delta, left, out);
  out.push_back({mid - delta, mid + delta});
  isolate_rec(chain, sf, mid + delta, hi, count - left - 1, out);
}

}  // namespace

std::vector<IsolatingInterval> isolate_distinct_roots(const Polynomial& sf, const Rational& lo,
                                                      const Rational& hi) {
  if (eval_sign(sf, lo) == 0)
    throw endpoint_root_error("isolate_distinct_roots: root at lower endpoint", lo);
  if (eval_sign(sf, hi) == 0)
    throw endpoint_root_error("isolate_distinct_roots: root at upper endpoint", hi);
  SturmChain chain = sturm_chain(sf);
  std::vector<IsolatingInterval> out;
  isolate_rec(chain, sf, lo, hi, chain_root_count(chain, lo, hi), out);
  return out;
}

namespace {

// Smallest power-of-1/2 step past an endpoint root: returns eps such that
// stripped has no root in (at, at+dir*eps] and stripped(at+dir*eps) != 0,
// where `stripped` is sf with the (q - at) factor removed.
Rational nudge_step(const Polynomial& stripped, const Rational& at, int dir,
                    const Rational& width) {
  Rational eps(1, 2);
  while (eps * 4 >= width) eps /= 2;
  SturmChain chain = sturm_chain(stripped);
  while (true) {
    Rational probe = at + Rational(dir) * eps;
    if (eval_sign(stripped, probe) != 0) {
      Rational a = dir > 0 ? at : probe;
      Rational b = dir > 0 ? probe : at;
      if (chain_root_count(chain, a, b) == 0) return eps;
    }
    eps /= 2;
  }
}

}  // namespace

InflectionReport count_sign_changes(const Polynomial& p, const Rational& lo, const Rational& hi) {
  if (p.is_zero()) throw std::invalid_argument("count_sign_changes: zero polynomial");
  if (!(lo < hi)) throw std::invalid_argument("count_sign_changes: need lo < hi");

  InflectionReport report;
  report.lo_used = lo;
  report.hi_used = hi;

  Polynomial sf = squarefree_part(p);

  if (evaluate_exact(p, lo) == 0) {
    Polynomial stripped = exact_div(sf, Polynomial({0, 1}) - Polynomial::constant(lo));
    report.lo_used = lo + nudge_step(stripped, lo, +1, hi - lo);
    report.lo_nudged = true;
  }
  if (evaluate_exact(p, hi) == 0) {
    Polynomial stripped = exact_div(sf, Polynomial({0, 1}) - Polynomial::constant(hi));
    report.hi_used = hi - nudge_step(stripped, hi, -1, hi - report.lo_used);
    report.hi_nudged = true;
  }

  if (sf.degree() < 1) return report;  // constant: no roots

  auto intervals = isolate_distinct_roots(sf, report.lo_used, report.hi_used);
  report.distinct_roots = static_cast<long>(intervals.size());
  for (const auto& iv : intervals) {
    int sl = eval_sign(p, iv.lo);
    int sh = eval_sign(p, iv.hi);
    if (sl * sh < 0) {
      ++report.sign_changes;
      report.isolating_intervals.push_back(iv);
    } else {
      ++report.touch_points;
    }
  }
  return report;
}

}  // namespace relpoly
