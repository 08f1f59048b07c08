#include "relpoly/rational.hpp"

#include <algorithm>
#include <cctype>

namespace relpoly {

Rational ratio(const Integer& num, const Integer& den) {
  if (den == 0) throw std::invalid_argument("rational: zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

namespace {

std::string strip_commas(const std::string& text) {
  std::string out;
  out.reserve(text.size());
  for (char c : text)
    if (c != ',') out.push_back(c);
  return out;
}

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  return std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

}  // namespace

Integer parse_integer(const std::string& text) {
  std::string s = strip_commas(text);
  std::string body = s;
  if (!body.empty() && (body[0] == '+' || body[0] == '-')) body = body.substr(1);
  if (!all_digits(body)) throw std::invalid_argument("not an integer: '" + text + "'");
  return Integer(s);
}

Rational parse_rational(const std::string& text) {
  std::string s = strip_commas(text);
  if (s.empty()) throw std::invalid_argument("empty rational");

  auto slash = s.find('/');
  if (slash != std::string::npos) {
    Integer num = parse_integer(s.substr(0, slash));
    Integer den = parse_integer(s.substr(slash + 1));
    return ratio(num, den);
  }

  auto dot = s.find('.');
  if (dot != std::string::npos) {
    std::string ipart = s.substr(0, dot);
    std::string fpart = s.substr(dot + 1);
    bool neg = false;
    if (!ipart.empty() && (ipart[0] == '+' || ipart[0] == '-')) {
      neg = ipart[0] == '-';
      ipart = ipart.substr(1);
    }
    if (ipart.empty()) ipart = "0";
    if (fpart.empty()) fpart = "0";
    if (!all_digits(ipart) || !all_digits(fpart))
      throw std::invalid_argument("not a decimal: '" + text + "'");
    Integer scale = int_pow(Integer(10), fpart.size());
    Integer num = Integer(ipart) * scale + Integer(fpart);
    if (neg) num = -num;
    return ratio(num, scale);
  }

  return Rational(parse_integer(s));
}

std::string decimal_string(const Rational& value, std::size_t digits) {
  Integer num = value.get_num();
  Integer den = value.get_den();
  bool neg = num < 0;
  if (neg) num = -num;

  Integer scale = int_pow(Integer(10), digits);
  // round half away from zero: floor((2*num*scale + den) / (2*den))
  Integer scaled = (2 * num * scale + den) / (2 * den);

  Integer ipart = scaled / scale;
  Integer fpart = scaled % scale;

  std::string out = neg && (ipart != 0 || fpart != 0) ? "-" : "";
  out += ipart.get_str();
  if (digits > 0) {
    std::string frac = fpart.get_str();
    out += '.';
    out += std::string(digits - frac.size(), '0');
    out += frac;
  }
  return out;
}

Rational rational_pow(const Rational& base, long e) {
  if (e == 0) return Rational(1);
  if (base == 0) {
    if (e < 0) throw std::domain_error("rational_pow: zero base, negative exponent");
    return Rational(0);
  }
  bool invert = e < 0;
  unsigned long ue = invert ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
  Rational r;
  mpz_pow_ui(r.get_num_mpz_t(), base.get_num().get_mpz_t(), ue);
  mpz_pow_ui(r.get_den_mpz_t(), base.get_den().get_mpz_t(), ue);
  r.canonicalize();
  if (invert) r = 1 / r;
  return r;
}

}  // namespace relpoly
