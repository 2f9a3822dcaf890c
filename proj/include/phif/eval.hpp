#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

#include "phif/config.hpp"
#include "phif/cplx.hpp"
#include "phif/taylor.hpp"

namespace phif {

template <class R>
const R& const_phi() {
  static const R v = QuadNum::phi().template to_real<R>();
  return v;
}
template <class R>
const R& const_two_phi() {
  static const R v = QuadNum::two_phi().template to_real<R>();
  return v;
}

// A value together with an absolute error bound (truncation + rounding).
struct EvalResult {
  std::complex<double> value;
  double error_bound = 0.0;
};

// P_n(w) = (w^2 - 1) composed n times. P_1 generates the Poincare equation
// f((2 phi) z) = P_1(f(z)); the primitive zeros of P_n seed the zero set of f.
inline std::complex<double> p_iterate(std::complex<double> w, int n) {
  if (n < 0) throw std::invalid_argument("p_iterate: negative iteration count");
  for (int i = 0; i < n; ++i) w = w * w - 1.0;
  return w;
}

template <class R>
cx<R> p_iterate_t(cx<R> w, int n) {
  if (n < 0) throw std::invalid_argument("p_iterate: negative iteration count");
  for (int i = 0; i < n; ++i) w = w * w - R(1);
  return w;
}

namespace detail {

inline double bound_to_double(double e) { return e * 1.01; }
template <class R>
double bound_to_double(const R& e) {
  return e.template convert_to<double>() * 1.01;
}

// Divides u by 2*phi until |u| <= 1; returns the number of steps.
template <class R>
int reduce_argument(cx<R>& u) {
  const R& w = const_two_phi<R>();
  int k = 0;
  while (norm_sq(u) > R(1)) {
    u = u / w;
    if (++k > 4000)
      throw std::domain_error("eval_f: argument reduction diverged");
  }
  return k;
}

template <class R>
struct Series {
  cx<R> value;
  R err;  // absolute: rounding + Taylor tail
};

// Truncated Taylor sum at |u| <= 1. Every coefficient satisfies
// 0 < c_n <= 1/n!, so the omitted tail is below 3 |u|^{N+1} / (N+1)!.
template <class R>
Series<R> series_f(const cx<R>& u, const std::vector<R>& c) {
  const int N = (int)c.size() - 1;
  const R eps = real_eps<R>();
  const R au = abs_cx(u);
  cx<R> w{};
  R aw{};
  for (int n = N; n >= 0; --n) {
    w = w * u + c[n];
    aw = aw * au + c[n];
  }
  R tail = R(1);
  for (int m = 1; m <= N + 1; ++m) tail = tail * au / R(m);
  return {w, eps * (R(2 * N + 2) * aw) + R(3) * tail};
}

template <class R>
struct FEval {
  cx<R> value;
  std::vector<cx<R>> orbit;    // orbit[j] = f(z (2phi)^{j-k}), j = 0..k
  std::vector<R> orbit_err;    // absolute error bound per orbit entry
  cx<R> u;                     // reduced argument, |u| <= 1
  int k = 0;                   // scaling steps applied
  R err{};                     // == orbit_err.back()
};

// Scaled evaluation: reduce z into the unit disk, sum the series there,
// then climb back with w -> w^2 - 1. Each squaring amplifies the absolute
// error by about 2|w|, which the error recurrence follows exactly.
template <class R>
FEval<R> eval_f_tier(const cx<R>& z, const EvalConfig& cfg) {
  const auto coef = taylor_coeffs_real<R>(cfg.series_cutoff);
  const R eps = real_eps<R>();
  FEval<R> out;
  out.u = z;
  out.k = reduce_argument(out.u);

  Series<R> s = series_f(out.u, *coef);
  cx<R> w = s.value;
  // |u| carries ~k rounding errors from the reduction; |f'| <= e on the disk.
  R e = s.err + R(3 * out.k + 3) * eps;

  out.orbit.reserve(out.k + 1);
  out.orbit_err.reserve(out.k + 1);
  out.orbit.push_back(w);
  out.orbit_err.push_back(e);
  for (int j = 1; j <= out.k; ++j) {
    const R aw = abs_cx(w);
    w = w * w - R(1);
    e = R(2) * aw * e + e * e + R(2) * eps * (aw * aw + R(1));
    out.orbit.push_back(w);
    out.orbit_err.push_back(e);
  }
  out.value = w;
  out.err = e;
  return out;
}

template <class R>
struct PEval {
  cx<R> value;
  R err;
};

template <class R>
R pow_two_phi(int n) {
  const R& w = const_two_phi<R>();
  R acc(1);
  for (int i = 0; i < n; ++i) acc = acc * w;
  return acc;
}

// f'(z) = prod_{m>=1} phi^{-1} f((2 phi)^{-m} z), truncated at
// cfg.product_depth. Factors with m <= k are the intermediate values of the
// scaled evaluation of f(z) itself; deeper factors are plain series sums.
template <class R>
PEval<R> eval_f_prime_tier(const cx<R>& z, const EvalConfig& cfg) {
  const auto coef = taylor_coeffs_real<R>(cfg.series_cutoff);
  const R eps = real_eps<R>();
  const R& ph = const_phi<R>();
  const R& tph = const_two_phi<R>();
  const FEval<R> main = eval_f_tier(z, cfg);
  const int D = cfg.product_depth;

  cx<R> prod(R(1));
  R perr{};
  cx<R> u = main.u;
  R au_next{};
  for (int m = 1; m <= D; ++m) {
    cx<R> v;
    R verr;
    if (m <= main.k) {
      v = main.orbit[main.k - m];
      verr = main.orbit_err[main.k - m];
    } else {
      u = u / tph;
      const Series<R> s = series_f(u, *coef);
      v = s.value;
      verr = s.err;
    }
    const R ap = abs_cx(prod);
    prod = prod * v / ph;
    perr = (perr * abs_cx(v) + ap * verr) / ph + R(2) * eps * abs_cx(prod);
  }
  // Omitted factors: phi^{-1} f(u_m) = 1 + O(u_m) with |u_m| shrinking by
  // 1/(2 phi) per step; sum of the deviations bounds the log of the tail.
  au_next = (main.k >= D) ? abs_cx(z) / pow_two_phi<R>(D + 1)
                          : abs_cx(u) / tph;
  using std::exp;
  const R tau = R(3) * au_next;
  perr = perr + abs_cx(prod) * (exp(tau) - R(1));
  return {prod, perr};
}

// Radical chain toward the fixed point phi of w -> sqrt(1+w). The principal
// branch has Re sqrt >= 0, so |sqrt(1+a) - phi| <= |a - phi| / phi for every
// complex a: the iteration contracts globally toward phi.
template <class R>
struct GEval {
  cx<R> value;
  R err;
};

template <class R>
GEval<R> eval_g_tier(const cx<R>& w0, const EvalConfig& cfg,
                     bool derivative) {
  const R eps = real_eps<R>();
  const R& ph = const_phi<R>();
  const R& tph = const_two_phi<R>();
  const int D = cfg.product_depth;

  cx<R> w = w0;
  cx<R> prod(R(1));
  R dist{};
  int steps = 0;
  const R stop_sq = R(16) * eps * eps;
  for (int n = 1; n <= D; ++n) {
    w = sqrt_cx(w + R(1));
    if (derivative) {
      if (norm_sq(w) == R(0))
        throw std::domain_error("eval_g_prime: singular radical (w = -1)");
      prod = prod * ph / w;  // factor phi / w_n
    } else {
      prod = prod * tph / (w + ph);  // factor 2 phi / (phi + w_n)
    }
    steps = n;
    const R d2 = norm_sq(w - ph);
    if (d2 < stop_sq) {
      dist = real_sqrt(d2);
      break;
    }
    if (n == D) dist = real_sqrt(d2);
  }
  if (dist > R(1) / R(16))
    throw std::domain_error(
        "eval_g: radical iteration failed to reach the fixed point");
  cx<R> value = derivative ? prod : (w0 - ph) * prod;
  const R trunc = abs_cx(value) * dist;  // remaining factors are 1 + O(dist)
  const R round = R(4 * steps + 4) * eps * abs_cx(value);
  return {value, trunc + round};
}

}  // namespace detail

inline int estimate_scaling_steps(std::complex<double> z) {
  double m = std::abs(z);
  int k = 0;
  while (m > 1.0 && k < 4000) {
    m /= 3.23606797749978969;  // 2 phi
    ++k;
  }
  return k;
}

inline EvalResult eval_f_err(std::complex<double> z,
                             const EvalConfig& cfg = {}) {
  cfg.validate();
  const int k = estimate_scaling_steps(z);
  return with_real_tier(working_bits(cfg, k), [&](auto tag) {
    using R = decltype(tag);
    const auto r = detail::eval_f_tier<R>(from_std<R>(z), cfg);
    return EvalResult{to_std(r.value), detail::bound_to_double(r.err)};
  });
}

inline std::complex<double> eval_f(std::complex<double> z,
                                   const EvalConfig& cfg = {}) {
  return eval_f_err(z, cfg).value;
}

inline EvalResult eval_f_prime_err(std::complex<double> z,
                                   const EvalConfig& cfg = {}) {
  cfg.validate();
  const int k = estimate_scaling_steps(z);
  return with_real_tier(working_bits(cfg, k), [&](auto tag) {
    using R = decltype(tag);
    const auto r = detail::eval_f_prime_tier<R>(from_std<R>(z), cfg);
    return EvalResult{to_std(r.value), detail::bound_to_double(r.err)};
  });
}

inline std::complex<double> eval_f_prime(std::complex<double> z,
                                         const EvalConfig& cfg = {}) {
  return eval_f_prime_err(z, cfg).value;
}

// |f(2 phi z) - (f(z)^2 - 1)| evaluated on the working tier so the identity
// can be checked below double-output resolution even where |f| is large.
inline double poincare_residual(std::complex<double> z,
                                const EvalConfig& cfg = {}) {
  cfg.validate();
  const int k = estimate_scaling_steps(z) + 1;
  return with_real_tier(working_bits(cfg, k), [&](auto tag) {
    using R = decltype(tag);
    const auto lhs =
        detail::eval_f_tier<R>(from_std<R>(z) * const_two_phi<R>(), cfg);
    const auto rhs = detail::eval_f_tier<R>(from_std<R>(z), cfg);
    return to_double(
        abs_cx(lhs.value - (rhs.value * rhs.value - R(1))));
  });
}

inline EvalResult eval_g_err(std::complex<double> w,
                             const EvalConfig& cfg = {}) {
  cfg.validate();
  return with_real_tier(cfg.precision + 16, [&](auto tag) {
    using R = decltype(tag);
    const auto r = detail::eval_g_tier<R>(from_std<R>(w), cfg, false);
    return EvalResult{to_std(r.value), detail::bound_to_double(r.err)};
  });
}

inline std::complex<double> eval_g(std::complex<double> w,
                                   const EvalConfig& cfg = {}) {
  return eval_g_err(w, cfg).value;
}

inline EvalResult eval_g_prime_err(std::complex<double> w,
                                   const EvalConfig& cfg = {}) {
  cfg.validate();
  return with_real_tier(cfg.precision + 16, [&](auto tag) {
    using R = decltype(tag);
    const auto r = detail::eval_g_tier<R>(from_std<R>(w), cfg, true);
    return EvalResult{to_std(r.value), detail::bound_to_double(r.err)};
  });
}

inline std::complex<double> eval_g_prime(std::complex<double> w,
                                         const EvalConfig& cfg = {}) {
  return eval_g_prime_err(w, cfg).value;
}

}  // namespace phif
