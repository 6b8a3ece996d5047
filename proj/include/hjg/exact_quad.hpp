#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <iosfwd>
#include <string>

namespace hjg {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// A number a + b*sqrt(2) with exact rational coefficients a, b.
//
// Everything the solvers touch -- minimizer actions, payoffs, switching
// probabilities, the discount sequences -- lives in this field, so value
// identities can be checked exactly instead of up to a floating tolerance.
// Coefficients are kept canonical (lowest terms, positive denominator) by
// the underlying rational type.
struct ExactQuad {
  Rational rat;   // rational part a
  Rational root;  // coefficient b of sqrt(2)

  ExactQuad() = default;
  ExactQuad(long long a) : rat(a) {}  // NOLINT(google-explicit-constructor)
  ExactQuad(Rational a) : rat(std::move(a)) {}  // NOLINT
  ExactQuad(Rational a, Rational b) : rat(std::move(a)), root(std::move(b)) {}

  bool is_rational() const { return root == 0; }
  bool is_zero() const { return rat == 0 && root == 0; }

  static ExactQuad sqrt2() { return ExactQuad(Rational(0), Rational(1)); }
  // num/den as an exact rational; den must be nonzero.
  static ExactQuad ratio(long long num, long long den);
  // 2^e for any integer e (negative exponents give exact dyadic fractions).
  static ExactQuad pow2(int e);
};

ExactQuad operator+(const ExactQuad& x, const ExactQuad& y);
ExactQuad operator-(const ExactQuad& x, const ExactQuad& y);
ExactQuad operator-(const ExactQuad& x);
ExactQuad operator*(const ExactQuad& x, const ExactQuad& y);
// Division multiplies by the conjugate; the conjugate norm a^2 - 2 b^2
// vanishes only at zero because sqrt(2) is irrational.
ExactQuad operator/(const ExactQuad& x, const ExactQuad& y);

bool operator==(const ExactQuad& x, const ExactQuad& y);
bool operator!=(const ExactQuad& x, const ExactQuad& y);
bool operator<(const ExactQuad& x, const ExactQuad& y);
bool operator<=(const ExactQuad& x, const ExactQuad& y);
bool operator>(const ExactQuad& x, const ExactQuad& y);
bool operator>=(const ExactQuad& x, const ExactQuad& y);

// Exact sign in {-1, 0, +1}.  When the two components disagree in sign the
// decision reduces to comparing a^2 against 2 b^2, which is an integer
// comparison -- no floating point is involved anywhere.
int sign(const ExactQuad& x);

ExactQuad abs(const ExactQuad& x);

// Largest integer <= x, computed exactly (integer square root brackets the
// sqrt(2) contribution, then at most two exact comparisons settle the cell).
BigInt floor_int(const ExactQuad& x);

// Correctly rounded decimal string with `digits` fractional digits.
// Rounding is to nearest; an exact half (only possible when root == 0)
// rounds away from zero.
std::string approx(const ExactQuad& x, int digits);

// Nearest-double conversion (used only at the boundary to float code).
double to_double(const ExactQuad& x);

// Canonical textual form "p/q+r/s*sqrt2" (or "p/q-r/s*sqrt2").
std::string exact_string(const ExactQuad& x);

std::ostream& operator<<(std::ostream& os, const ExactQuad& x);

}  // namespace hjg
