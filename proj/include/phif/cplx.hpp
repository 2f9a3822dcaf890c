#pragma once

#include <cmath>
#include <complex>
#include <utility>

#include "phif/precision.hpp"

namespace phif {

// Minimal complex-over-R template. std::complex is only specified for
// built-in floating types, and the principal square root branch is
// load-bearing here, so we keep the arithmetic explicit and identical
// across all precision tiers.
template <class R>
struct cx {
  R re{};
  R im{};

  cx() = default;
  cx(R r) : re(std::move(r)), im(R(0)) {}
  cx(R r, R i) : re(std::move(r)), im(std::move(i)) {}
};

template <class R>
inline R real_sqrt(const R& x) {
  using std::sqrt;
  return sqrt(x);
}

template <class R>
inline R real_abs(const R& x) {
  using std::abs;
  return abs(x);
}

template <class R>
inline cx<R> operator+(const cx<R>& a, const cx<R>& b) {
  return {a.re + b.re, a.im + b.im};
}
template <class R>
inline cx<R> operator-(const cx<R>& a, const cx<R>& b) {
  return {a.re - b.re, a.im - b.im};
}
template <class R>
inline cx<R> operator-(const cx<R>& a) {
  return {-a.re, -a.im};
}
template <class R>
inline cx<R> operator*(const cx<R>& a, const cx<R>& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
template <class R>
inline cx<R> operator*(const cx<R>& a, const R& s) {
  return {a.re * s, a.im * s};
}
template <class R>
inline cx<R> operator*(const R& s, const cx<R>& a) {
  return a * s;
}
template <class R>
inline cx<R> operator/(const cx<R>& a, const R& s) {
  return {a.re / s, a.im / s};
}
template <class R>
inline cx<R> operator/(const cx<R>& a, const cx<R>& b) {
  const R d = b.re * b.re + b.im * b.im;
  return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
}
template <class R>
inline cx<R> operator/(const R& s, const cx<R>& b) {
  const R d = b.re * b.re + b.im * b.im;
  return {s * b.re / d, -s * b.im / d};
}
template <class R>
inline cx<R> operator+(const cx<R>& a, const R& s) {
  return {a.re + s, a.im};
}
template <class R>
inline cx<R> operator+(const R& s, const cx<R>& a) {
  return a + s;
}
template <class R>
inline cx<R> operator-(const cx<R>& a, const R& s) {
  return {a.re - s, a.im};
}
template <class R>
inline cx<R> operator-(const R& s, const cx<R>& a) {
  return {s - a.re, -a.im};
}

template <class R>
inline R norm_sq(const cx<R>& z) {
  return z.re * z.re + z.im * z.im;
}
template <class R>
inline R abs_cx(const cx<R>& z) {
  return real_sqrt(norm_sq(z));
}
template <class R>
inline cx<R> conj_cx(const cx<R>& z) {
  return {z.re, -z.im};
}

// Principal square root: Re >= 0, and for negative real input the result
// lies on the positive imaginary axis. The half with the larger magnitude
// is computed first to avoid cancellation in r +/- |re|.
template <class R>
inline cx<R> sqrt_cx(const cx<R>& z) {
  const R zero(0), two(2);
  if (z.im == zero) {
    if (z.re >= zero) return {real_sqrt(z.re), zero};
    return {zero, real_sqrt(-z.re)};
  }
  const R r = abs_cx(z);
  if (z.re >= zero) {
    const R u = real_sqrt((r + z.re) / two);
    return {u, z.im / (two * u)};
  }
  const R v = real_sqrt((r - z.re) / two);  // |imaginary part|
  if (z.im >= zero) return {z.im / (two * v), v};
  return {-z.im / (two * v), -v};
}

template <class R>
inline std::complex<double> to_std(const cx<R>& z) {
  return {to_double(z.re), to_double(z.im)};
}

template <class R>
inline cx<R> from_std(const std::complex<double>& z) {
  return {R(z.real()), R(z.imag())};
}

// Cross-tier conversion (narrowing or widening).
template <class To, class From>
inline cx<To> cx_cast(const cx<From>& z) {
  return {static_cast<To>(z.re), static_cast<To>(z.im)};
}

}  // namespace phif
