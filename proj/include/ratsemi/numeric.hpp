#pragma once

#include <cmath>
#include <complex>
#include <utility>
#include <vector>

namespace ratsemi::numeric {

// Double-double value: an unevaluated sum hi + lo with |lo| bounded by half
// an ulp of hi, giving roughly 106 significand bits.  This is the single
// escalation precision for path tracking; it is not validated arithmetic.
struct DD {
  double hi = 0.0;
  double lo = 0.0;

  DD() = default;
  DD(double h) : hi(h) {}  // doubles embed exactly
  DD(double h, double l) {
    const double s = h + l;
    const double bb = s - h;
    hi = s;
    lo = (h - (s - bb)) + (l - bb);
  }

  double to_double() const { return hi; }
};

namespace detail {

inline void two_sum(double a, double b, double& s, double& e) {
  s = a + b;
  const double bb = s - a;
  e = (a - (s - bb)) + (b - bb);
}

inline void quick_two_sum(double a, double b, double& s, double& e) {
  s = a + b;
  e = b - (s - a);
}

inline void two_prod(double a, double b, double& p, double& e) {
  p = a * b;
  e = std::fma(a, b, -p);
}

}  // namespace detail

inline DD operator+(const DD& a, const DD& b) {
  double s1, s2, t1, t2;
  detail::two_sum(a.hi, b.hi, s1, s2);
  detail::two_sum(a.lo, b.lo, t1, t2);
  s2 += t1;
  detail::quick_two_sum(s1, s2, s1, s2);
  s2 += t2;
  detail::quick_two_sum(s1, s2, s1, s2);
  return DD(s1, s2);
}

inline DD operator-(const DD& a) { return DD(-a.hi, -a.lo); }
inline DD operator-(const DD& a, const DD& b) { return a + (-b); }

inline DD operator*(const DD& a, const DD& b) {
  double p1, p2;
  detail::two_prod(a.hi, b.hi, p1, p2);
  p2 += a.hi * b.lo + a.lo * b.hi;
  detail::quick_two_sum(p1, p2, p1, p2);
  return DD(p1, p2);
}

inline DD operator/(const DD& a, const DD& b) {
  const double q1 = a.hi / b.hi;
  DD r = a - b * DD(q1);
  const double q2 = r.hi / b.hi;
  r = r - b * DD(q2);
  const double q3 = r.hi / b.hi;
  return DD(q1, q2) + DD(q3);
}

inline bool operator==(const DD& a, const DD& b) {
  return a.hi == b.hi && a.lo == b.lo;
}
inline bool operator<(const DD& a, const DD& b) {
  return a.hi < b.hi || (a.hi == b.hi && a.lo < b.lo);
}
inline bool operator<=(const DD& a, const DD& b) { return a == b || a < b; }
inline DD abs(const DD& a) { return a.hi < 0 || (a.hi == 0 && a.lo < 0) ? -a : a; }

// Minimal complex template shared by the double and double-double tracking
// paths.  std::complex is not usable here because its arithmetic is only
// specified for the built-in floating types.
template <typename R>
struct Cx {
  R re{};
  R im{};
};

template <typename R>
Cx<R> operator+(const Cx<R>& a, const Cx<R>& b) {
  return {a.re + b.re, a.im + b.im};
}
template <typename R>
Cx<R> operator-(const Cx<R>& a, const Cx<R>& b) {
  return {a.re - b.re, a.im - b.im};
}
template <typename R>
Cx<R> operator-(const Cx<R>& a) {
  return {-a.re, -a.im};
}
template <typename R>
Cx<R> operator*(const Cx<R>& a, const Cx<R>& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
template <typename R>
Cx<R> operator/(const Cx<R>& a, const Cx<R>& b) {
  const R d = b.re * b.re + b.im * b.im;
  return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
}
template <typename R>
R abs2(const Cx<R>& a) {
  return a.re * a.re + a.im * a.im;
}

// Horner evaluation of an ascending-coefficient polynomial, and the variant
// that also returns the derivative value.
template <typename R>
Cx<R> poly_eval(const std::vector<Cx<R>>& c, const Cx<R>& x) {
  Cx<R> v{};
  for (auto it = c.rbegin(); it != c.rend(); ++it) v = v * x + *it;
  return v;
}

template <typename R>
std::pair<Cx<R>, Cx<R>> poly_eval_deriv(const std::vector<Cx<R>>& c,
                                        const Cx<R>& x) {
  Cx<R> v{};
  Cx<R> d{};
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    d = d * x + v;
    v = v * x + *it;
  }
  return {v, d};
}

// All complex roots of an ascending-coefficient polynomial with nonzero
// leading coefficient, by the Durand-Kerner all-roots iteration from a
// fixed starting configuration.  Deterministic: no randomness, fixed
// iteration caps, a final fixed number of Newton polish steps per root.
std::vector<std::complex<double>> all_roots(
    std::vector<std::complex<double>> coeffs);

}  // namespace ratsemi::numeric
