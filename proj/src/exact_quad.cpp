#include "hjg/exact_quad.hpp"

#include <cassert>
#include <cmath>
#include <ostream>
#include <stdexcept>
#include <utility>

namespace hjg {

ExactQuad ExactQuad::ratio(long long num, long long den) {
  if (den == 0) throw std::domain_error("ExactQuad::ratio: zero denominator");
  // the rational type insists on a positive denominator
  BigInt n(num), d(den);
  if (d < 0) {
    n = -n;
    d = -d;
  }
  return ExactQuad(Rational(n, d));
}

ExactQuad ExactQuad::pow2(int e) {
  if (e >= 0) return ExactQuad(Rational(BigInt(1) << e));
  return ExactQuad(Rational(BigInt(1), BigInt(1) << -e));
}

ExactQuad operator+(const ExactQuad& x, const ExactQuad& y) {
  return ExactQuad(x.rat + y.rat, x.root + y.root);
}

ExactQuad operator-(const ExactQuad& x, const ExactQuad& y) {
  return ExactQuad(x.rat - y.rat, x.root - y.root);
}

ExactQuad operator-(const ExactQuad& x) { return ExactQuad(-x.rat, -x.root); }

ExactQuad operator*(const ExactQuad& x, const ExactQuad& y) {
  // (a + b s)(c + d s) = (ac + 2bd) + (ad + bc) s   with s = sqrt(2)
  return ExactQuad(x.rat * y.rat + 2 * x.root * y.root,
                   x.rat * y.root + x.root * y.rat);
}

ExactQuad operator/(const ExactQuad& x, const ExactQuad& y) {
  if (y.is_zero()) throw std::domain_error("ExactQuad: division by zero");
  const Rational norm = y.rat * y.rat - 2 * y.root * y.root;
  assert(norm != 0);
  const ExactQuad num = x * ExactQuad(y.rat, -y.root);
  return ExactQuad(num.rat / norm, num.root / norm);
}

int sign(const ExactQuad& x) {
  const int sa = x.rat.sign();
  const int sb = x.root.sign();
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sb;
  // Components disagree: compare |a| with |b| sqrt(2) via a^2 vs 2 b^2.
  // Equality would make sqrt(2) rational, so it cannot occur here.
  const int c = Rational(x.rat * x.rat).compare(Rational(2 * x.root * x.root));
  assert(c != 0);
  return c > 0 ? sa : sb;
}

bool operator==(const ExactQuad& x, const ExactQuad& y) {
  return x.rat == y.rat && x.root == y.root;
}
bool operator!=(const ExactQuad& x, const ExactQuad& y) { return !(x == y); }
bool operator<(const ExactQuad& x, const ExactQuad& y) {
  return sign(x - y) < 0;
}
bool operator<=(const ExactQuad& x, const ExactQuad& y) {
  return sign(x - y) <= 0;
}
bool operator>(const ExactQuad& x, const ExactQuad& y) {
  return sign(x - y) > 0;
}
bool operator>=(const ExactQuad& x, const ExactQuad& y) {
  return sign(x - y) >= 0;
}

ExactQuad abs(const ExactQuad& x) { return sign(x) < 0 ? -x : x; }

namespace {

BigInt floor_div(const BigInt& num, const BigInt& den) {
  assert(den > 0);
  BigInt q = num / den;
  if (num % den != 0 && num < 0) --q;
  return q;
}

}  // namespace

BigInt floor_int(const ExactQuad& x) {
  using boost::multiprecision::denominator;
  using boost::multiprecision::numerator;
  const BigInt an = numerator(x.rat), ad = denominator(x.rat);
  if (x.root == 0) return floor_div(an, ad);
  const BigInt bn = numerator(x.root), bd = denominator(x.root);
  // x = (A + B sqrt(2)) / q with integer A, B and q > 0.
  const BigInt q = ad * bd;
  const BigInt A = an * bd;
  const BigInt B = bn * ad;
  // s = floor(|B| sqrt(2)) brackets the irrational part within one unit.
  const BigInt s = boost::multiprecision::sqrt(BigInt(2 * B * B));
  BigInt m = (B > 0) ? floor_div(A + s, q) : floor_div(A - s - 1, q);
  // The bracket can be off by one; settle it with exact comparisons.
  while (sign(x - ExactQuad(Rational(m + 1))) >= 0) ++m;
  while (sign(x - ExactQuad(Rational(m))) < 0) --m;
  return m;
}

std::string approx(const ExactQuad& x, int digits) {
  if (digits < 1 || digits > 1000)
    throw std::domain_error("approx: digits out of range");
  const BigInt p10 = boost::multiprecision::pow(BigInt(10), unsigned(digits));
  const ExactQuad scaled = x * ExactQuad(Rational(p10));
  BigInt r = floor_int(scaled);
  const int half = sign(scaled - ExactQuad(Rational(r)) - ExactQuad::ratio(1, 2));
  if (half > 0 || (half == 0 && sign(x) > 0)) ++r;  // ties go away from zero
  const bool neg = r < 0 || (r == 0 && sign(x) < 0);
  const BigInt mag = boost::multiprecision::abs(r);
  std::string frac = BigInt(mag % p10).str();
  frac.insert(0, std::size_t(digits) - frac.size(), '0');
  return (neg ? "-" : "") + BigInt(mag / p10).str() + "." + frac;
}

double to_double(const ExactQuad& x) {
  return x.rat.convert_to<double>() +
         x.root.convert_to<double>() * std::sqrt(2.0);
}

std::string exact_string(const ExactQuad& x) {
  using boost::multiprecision::denominator;
  using boost::multiprecision::numerator;
  std::string out = numerator(x.rat).str() + "/" + denominator(x.rat).str();
  out += x.root.sign() < 0 ? "-" : "+";
  const Rational b = boost::multiprecision::abs(x.root);
  out += numerator(b).str() + "/" + denominator(b).str() + "*sqrt2";
  return out;
}

std::ostream& operator<<(std::ostream& os, const ExactQuad& x) {
  return os << exact_string(x);
}

}  // namespace hjg
