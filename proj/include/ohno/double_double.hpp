#pragma once

#include <cmath>

namespace ohno {

/// Unevaluated sum hi + lo with |lo| <= ulp(hi)/2; about 104 bits of
/// mantissa. The operation sequences below are mirrored lane for lane by
/// the AVX2 kernel, so any change here must be made there too.
struct DoubleDouble {
  double hi = 0.0;
  double lo = 0.0;

  constexpr DoubleDouble() = default;
  constexpr DoubleDouble(double h) : hi(h), lo(0.0) {}  // NOLINT(google-explicit-constructor)
  constexpr DoubleDouble(double h, double l) : hi(h), lo(l) {}

  double to_double() const { return hi + lo; }
};

namespace dd {

inline DoubleDouble two_sum(double a, double b) {
  const double s = a + b;
  const double bb = s - a;
  const double e = (a - (s - bb)) + (b - bb);
  return {s, e};
}

inline DoubleDouble fast_two_sum(double a, double b) {
  const double s = a + b;
  const double e = b - (s - a);
  return {s, e};
}

inline DoubleDouble add(DoubleDouble a, DoubleDouble b) {
  DoubleDouble s = two_sum(a.hi, b.hi);
  const DoubleDouble t = two_sum(a.lo, b.lo);
  s.lo = s.lo + t.hi;
  s = fast_two_sum(s.hi, s.lo);
  s.lo = s.lo + t.lo;
  return fast_two_sum(s.hi, s.lo);
}

inline DoubleDouble neg(DoubleDouble a) { return {-a.hi, -a.lo}; }

inline DoubleDouble sub(DoubleDouble a, DoubleDouble b) { return add(a, neg(b)); }

inline DoubleDouble mul(DoubleDouble a, DoubleDouble b) {
  const double p = a.hi * b.hi;
  double e = std::fma(a.hi, b.hi, -p);
  const double cross = a.hi * b.lo + a.lo * b.hi;
  e = e + cross;
  return fast_two_sum(p, e);
}

/// Exact product of two doubles.
inline DoubleDouble two_prod(double a, double b) {
  const double p = a * b;
  return {p, std::fma(a, b, -p)};
}

/// Multiplication by 2^exp; exact away from underflow.
inline DoubleDouble ldexp(DoubleDouble a, int exp) { return {std::ldexp(a.hi, exp), std::ldexp(a.lo, exp)}; }

/// 1/n rounded to double-double.
inline DoubleDouble reciprocal(int n) {
  const double d = static_cast<double>(n);
  const double hi = 1.0 / d;
  const double residual = std::fma(-hi, d, 1.0);
  return fast_two_sum(hi, residual / d);
}

/// a / b for doubles a, b, correct to double-double accuracy.
inline DoubleDouble div(double a, double b) {
  const double q1 = a / b;
  const double r = std::fma(-q1, b, a);
  return fast_two_sum(q1, r / b);
}

inline DoubleDouble abs(DoubleDouble a) { return a.hi < 0.0 || (a.hi == 0.0 && a.lo < 0.0) ? neg(a) : a; }

}  // namespace dd

}  // namespace ohno
