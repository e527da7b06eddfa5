#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace checkerboard {

// All arithmetic in this library is exact. Integers and rationals are
// arbitrary precision; there is no floating point anywhere.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int numerator(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int denominator(const Rat& r) { return boost::multiprecision::denominator(r); }

inline bool is_integer(const Rat& r) { return denominator(r) == 1; }

/// Converts an exactly-integral rational to Int, throwing otherwise.
inline Int to_int(const Rat& r) {
  if (!is_integer(r)) {
    throw std::domain_error("expected an integer value, got " + r.str());
  }
  return numerator(r);
}

inline Int abs(const Int& v) { return boost::multiprecision::abs(v); }

/// num/den as an exact rational; unlike the Rat(num, den) constructor this
/// accepts a negative denominator.
inline Rat make_rat(const Int& num, const Int& den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  return den < 0 ? Rat(-num, -den) : Rat(num, den);
}

inline Int gcd(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }

/// floor(sqrt(v)) for v >= 0.
inline Int isqrt(const Int& v) {
  if (v < 0) throw std::domain_error("isqrt of negative value");
  return boost::multiprecision::sqrt(v);
}

struct ExtGcd {
  Int g;  // gcd(a, b) >= 0
  Int x;  // a*x + b*y = g
  Int y;
};

/// Extended Euclid. ext_gcd(0, 0) = {0, 0, 0}.
inline ExtGcd ext_gcd(Int a, Int b) {
  Int x0 = 1, y0 = 0, x1 = 0, y1 = 1;
  while (b != 0) {
    Int q = a / b;
    Int r = a - q * b;
    a = b;
    b = r;
    Int x2 = x0 - q * x1;
    Int y2 = y0 - q * y1;
    x0 = x1;
    y0 = y1;
    x1 = x2;
    y1 = y2;
  }
  if (a < 0) {
    a = -a;
    x0 = -x0;
    y0 = -y0;
  }
  return {a, x0, y0};
}

/// Floor division; remainder has the sign of the divisor.
inline Int floor_div(const Int& a, const Int& b) {
  Int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

/// Quotient with balanced remainder: a - q*b lies in (-|b|/2, |b|/2].
/// Keeps entry growth under control in the normal-form eliminations.
inline Int balanced_div(const Int& a, const Int& b) {
  Int q = floor_div(a, b);
  Int r = a - q * b;  // 0 <= r < |b|
  if (2 * r > abs(b)) q += (b > 0 ? 1 : -1);
  return q;
}

inline Int factorial(int n) {
  Int f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

inline Int binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  Int b = 1;
  for (int i = 0; i < k; ++i) {
    b *= n - i;
    b /= i + 1;
  }
  return b;
}

}  // namespace checkerboard
