#include "pathpoly/numeric.hpp"

#include <cctype>

#include "pathpoly/errors.hpp"

namespace pathpoly {

namespace {

bool valid_integer_token(const std::string& s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

}  // namespace

Rat parse_rational(const std::string& text) {
  std::size_t slash = text.find('/');
  if (slash == std::string::npos) {
    if (!valid_integer_token(text))
      fail(errc::bad_parameters, "not a rational: '" + text + "'");
    return Rat(Int(text));
  }
  std::string num = text.substr(0, slash);
  std::string den = text.substr(slash + 1);
  if (!valid_integer_token(num) || !valid_integer_token(den))
    fail(errc::bad_parameters, "not a rational: '" + text + "'");
  Int d(den);
  if (d == 0) fail(errc::bad_parameters, "zero denominator: '" + text + "'");
  return Rat(Int(num), d);
}

std::string format_rational(const Rat& value) {
  Int num = numerator(value);
  Int den = denominator(value);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

Int ivec_gcd(const IVec& v) {
  Int g = 0;
  for (const Int& x : v) g = boost::multiprecision::gcd(g, x);
  return g;
}

Rat dot(const QVec& a, const QVec& b) {
  Rat s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

bool is_zero(const QVec& v) {
  for (const Rat& x : v)
    if (x != 0) return false;
  return true;
}

bool is_zero(const IVec& v) {
  for (const Int& x : v)
    if (x != 0) return false;
  return true;
}

QVec add(const QVec& a, const QVec& b) {
  QVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

QVec sub(const QVec& a, const QVec& b) {
  QVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

QVec scale(const QVec& v, const Rat& s) {
  QVec r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = v[i] * s;
  return r;
}

QVec to_rational(const IVec& v) {
  QVec r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = Rat(v[i]);
  return r;
}

IVec primitive(const QVec& v) {
  Int lcm = 1;
  for (const Rat& x : v) lcm = boost::multiprecision::lcm(lcm, denominator(x));
  IVec w(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    Rat scaled = v[i] * lcm;
    w[i] = numerator(scaled);
  }
  Int g = ivec_gcd(w);
  if (g > 1)
    for (Int& x : w) x /= g;
  return w;
}

}  // namespace pathpoly
