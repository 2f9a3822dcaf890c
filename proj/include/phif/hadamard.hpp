#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "phif/zeros.hpp"

namespace phif {

// Value plus an absolute error bound combining truncation and rounding.
struct Approx {
  std::complex<double> value;
  double error_bound = 0.0;
};

// Finite section of H(z) = prod_n (1 - z/z_n) over the simple zeros of f.
//
// The zero list is generated by sigma enumeration up to prefix length L;
// rings up to complete_ring are fully enumerated (deeper rings only
// partially), and the truncation bound of every representation below is
// derived from the first omitted ring: counts grow like 2^r while the ring
// radius grows like (2 phi)^r, so the omitted-factor log sums geometrically.
struct HProduct {
  std::vector<ZeroRecord> zeros;
  int truncation_L = 0;
  int complete_ring = 0;
  std::map<int, int> ring_counts;

  static HProduct build(int L, const EvalConfig& cfg = {}) {
    HProduct h;
    h.zeros = enumerate_simple_zeros(L, cfg);
    h.truncation_L = L;
    h.complete_ring = std::max(0, L - 2);
    for (const auto& r : h.zeros) ++h.ring_counts[r.ring];
    return h;
  }
};

namespace detail {

// Bound on |log prod_omitted (1 - z/z_j)| at |z| = az. Infinite when az is
// not well inside the first omitted ring.
inline double h_tail_log_bound(const HProduct& h, double az) {
  const int R = h.complete_ring;
  const auto it = h.ring_counts.find(R);
  const double nr = it != h.ring_counts.end() ? (double)it->second : 1.0;
  const double rho = two_phi_pow_d(R + 1);
  if (!(az < 0.9 * rho)) return std::numeric_limits<double>::infinity();
  return 4.0 * 5.236 * nr * az / rho / (1.0 - az / rho);
}

inline std::complex<double> pow_int(std::complex<double> b, unsigned e) {
  std::complex<double> acc{1.0, 0.0};
  while (e) {
    if (e & 1u) acc *= b;
    e >>= 1u;
    if (e) b *= b;
  }
  return acc;
}

constexpr double eps_d = 2.220446049250313e-16;

}  // namespace detail

inline Approx h_eval(const HProduct& h, std::complex<double> z) {
  std::complex<double> p{1.0, 0.0};
  double perr = 0.0;
  for (const auto& rec : h.zeros) {
    const std::complex<double> fac = 1.0 - z / rec.value;
    const double afac = std::abs(fac);
    perr = perr * afac + std::abs(p) * detail::eps_d * (2.0 + std::abs(z / rec.value));
    p *= fac;
  }
  const double beta = detail::h_tail_log_bound(h, std::abs(z));
  const double trunc = std::abs(p) * std::expm1(beta);
  return {p, perr + trunc};
}

// f(z) = 1 + H(2 phi z) / phi  -- the cheapest simple-zero representation.
inline Approx f_via_h(const HProduct& h, std::complex<double> z) {
  static constexpr double phi_d = 1.61803398874989485;
  const Approx a = h_eval(h, z * 3.23606797749978969);
  return {1.0 + a.value / phi_d,
          a.error_bound / phi_d + 4.0 * detail::eps_d * (1.0 + std::abs(a.value))};
}

// f(z) = sqrt(2 + phi^{-1} H((2 phi)^2 z)), principal branch. The flag
// reports when the result sits so close to the branch boundary Re = 0 that
// the sign of the true f cannot be told from H alone.
struct SqrtApprox : Approx {
  bool branch_ambiguous = false;
};

inline SqrtApprox f_via_sqrt(const HProduct& h, std::complex<double> z) {
  static constexpr double phi_d = 1.61803398874989485;
  const Approx a = h_eval(h, z * 10.4721359549995794);
  const std::complex<double> x = 2.0 + a.value / phi_d;
  const double xerr = a.error_bound / phi_d + 4.0 * detail::eps_d * std::abs(x);
  const std::complex<double> r = to_std(sqrt_cx(from_std<double>(x)));
  SqrtApprox out;
  out.value = r;
  const double ar = std::abs(r);
  out.error_bound = ar > 0 && xerr < ar * ar ? xerr / (2.0 * ar) + detail::eps_d * ar
                                             : std::sqrt(xerr) + detail::eps_d;
  out.branch_ambiguous = r.real() <= out.error_bound;
  return out;
}

namespace detail {

// Multiplies acc by v^e and propagates the absolute error bound:
// |d(v^e)| <= e |v|^{e-1} dv. Exact when a factor sits on a zero of H.
inline void mul_pow_tracked(std::complex<double>& acc, double& err,
                            std::complex<double> v, double dv, unsigned e) {
  const std::complex<double> ve = pow_int(v, e);
  const double av = std::abs(v);
  const double dve = (double)e * std::pow(av, (double)(e - 1)) * dv;
  err = err * std::abs(ve) + std::abs(acc) * dve + 4.0 * eps_d * std::abs(acc * ve);
  acc *= ve;
}

}  // namespace detail

// Weierstrass-Hadamard form f(z) = phi prod_{n>=0} H(z / (2phi)^{2n})^{2^n},
// truncated to `terms` outer factors.
inline Approx f_via_wh(const HProduct& h, std::complex<double> z, int terms) {
  if (terms < 1) throw std::invalid_argument("f_via_wh: terms must be >= 1");
  static constexpr double phi_d = 1.61803398874989485;
  static constexpr double q = 0.19098300562505258;  // 2 / (2 phi)^2
  std::complex<double> p{phi_d, 0.0};
  double perr = 0.0;
  std::complex<double> arg = z;
  for (int n = 0; n < terms; ++n) {
    const Approx a = h_eval(h, arg);
    detail::mul_pow_tracked(p, perr, a.value, a.error_bound, 1u << n);
    arg /= 10.4721359549995794;
  }
  // omitted outer factors: log H(u) ~ u/2 near 0, summed geometrically
  const double tail = 0.7 * std::abs(z) * std::pow(q, terms) / (1.0 - q);
  return {p, perr + std::abs(p) * std::expm1(tail)};
}

// f'(z) = prod_{n>=1} H(z/(2phi)^{2n})^{2^n - 1} H(z/(2phi)^{2n-1})^{2^n - 1}.
inline Approx f_prime_via_h(const HProduct& h, std::complex<double> z,
                            int terms) {
  if (terms < 1) throw std::invalid_argument("f_prime_via_h: terms must be >= 1");
  static constexpr double q = 0.19098300562505258;
  std::complex<double> p{1.0, 0.0};
  double perr = 0.0;
  for (int n = 1; n <= terms; ++n) {
    const unsigned e = (1u << n) - 1u;
    for (const double shift : {2.0 * n, 2.0 * n - 1.0}) {
      const std::complex<double> arg = z / two_phi_pow_d((int)shift);
      const Approx a = h_eval(h, arg);
      detail::mul_pow_tracked(p, perr, a.value, a.error_bound, e);
    }
  }
  const double tail =
      2.2 * std::abs(z) * std::pow(q, terms + 1) / (1.0 - q);
  return {p, perr + std::abs(p) * std::expm1(tail)};
}

// ---------------------------------------------------------------------------
// Closed forms over sign sequences
// ---------------------------------------------------------------------------

enum class ClosedVariant {
  theorem1,  // innermost sqrt2: simple zeros, f = 1 + phi^{-1} prod(1 + z phi w)
  remark     // innermost sqrt1: multiplicities included, f = phi prod(1 + z w / phi)
};

// Weights w_sigma = prod_n (phi + sigma_n U_n) / (2 phi). For theorem1 the
// chain starts at sqrt2 and w_sigma = -2 / z0(sigma); for remark it starts
// at sqrt1 = 1, where a radicand can hit exactly 0 -- the chain continues
// through it (0 and 1 are exact in binary floating point), which is what
// encodes the zero multiplicities.
struct ClosedForm {
  ClosedVariant variant = ClosedVariant::theorem1;
  int L = 0;
  std::vector<std::complex<double>> weights;  // DFS order
  std::vector<int> shell;                     // last -1 position per weight
  double tail_abs = 0.0;  // extrapolated sum of omitted |w|

  static ClosedForm build(ClosedVariant v, int L) {
    ClosedForm cf;
    cf.variant = v;
    cf.L = L;
    const cx<double> innermost =
        v == ClosedVariant::theorem1 ? cx<double>(std::sqrt(2.0)) : cx<double>(1.0);
    detail::walk_sigma<double>(
        L, true, innermost,
        [&](const std::vector<std::int8_t>& sigma, const cx<double>& w) {
          cf.weights.push_back(to_std(w));
          cf.shell.push_back((int)sigma.size());
        });
    // Shell sums |w| decay geometrically (~(2/(2 phi))^m); fit the ratio on
    // the deepest shells and extrapolate the omitted tail.
    std::vector<double> s(L + 1, 0.0);
    for (std::size_t i = 0; i < cf.weights.size(); ++i)
      s[cf.shell[i]] += std::abs(cf.weights[i]);
    double kappa = 0.618;
    if (L >= 3 && s[L - 1] > 0 && s[L - 2] > 0) {
      kappa = std::max(s[L] / s[L - 1], s[L - 1] / s[L - 2]);
      kappa = std::min(std::max(kappa, 0.1), 0.85);
    }
    cf.tail_abs = (L >= 1 ? s[L] : std::abs(cf.weights[0])) * kappa / (1.0 - kappa);
    return cf;
  }

  Approx eval(std::complex<double> z) const {
    static constexpr double phi_d = 1.61803398874989485;
    std::complex<double> p{1.0, 0.0};
    double aw_sum = 0.0;
    if (variant == ClosedVariant::theorem1) {
      for (const auto& w : weights) {
        p *= 1.0 + z * phi_d * w;
        aw_sum += std::abs(w);
      }
      const double az = std::abs(z) * phi_d;
      const double log_err = 2.0 * az * tail_abs + 60.0 * detail::eps_d * az * aw_sum;
      const std::complex<double> value = 1.0 + p / phi_d;
      return {value, std::abs(p) / phi_d * std::expm1(log_err) +
                         detail::eps_d * 4.0 * (double)weights.size() *
                             std::abs(p) / phi_d};
    }
    for (const auto& w : weights) {
      p *= 1.0 + z * w / phi_d;
      aw_sum += std::abs(w);
    }
    const double az = std::abs(z) / phi_d;
    const double log_err = 2.0 * az * tail_abs + 60.0 * detail::eps_d * az * aw_sum;
    const std::complex<double> value = phi_d * p;
    return {value, std::abs(value) * std::expm1(log_err) +
                       detail::eps_d * 4.0 * (double)weights.size() * std::abs(value)};
  }
};

namespace detail {

inline std::shared_ptr<const ClosedForm> closed_form_cached(ClosedVariant v,
                                                            int L) {
  static std::mutex m;
  static std::map<std::pair<int, int>, std::shared_ptr<const ClosedForm>> cache;
  std::lock_guard<std::mutex> lock(m);
  auto& slot = cache[{(int)v, L}];
  if (!slot) slot = std::make_shared<ClosedForm>(ClosedForm::build(v, L));
  return slot;
}

}  // namespace detail

inline Approx closed_form_eval(std::complex<double> z, int L,
                               ClosedVariant variant) {
  if (L < 0 || L > 24)
    throw std::invalid_argument("closed_form_eval: need 0 <= L <= 24");
  return detail::closed_form_cached(variant, L)->eval(z);
}

// Partial sums of the first-moment identity sum_sigma w_sigma = f'(0) = 1,
// by increasing prefix length. Entry S[m] sums every weight whose last -1
// sits at position <= m.
inline std::vector<double> moment_partial_sums(int Lmax, ClosedVariant variant) {
  if (Lmax < 0 || Lmax > 24)
    throw std::invalid_argument("moment_partial_sums: need 0 <= Lmax <= 24");
  const auto cf = detail::closed_form_cached(variant, Lmax);
  std::vector<double> shell_sum(Lmax + 1, 0.0);
  std::vector<double> shell_imag(Lmax + 1, 0.0);
  for (std::size_t i = 0; i < cf->weights.size(); ++i) {
    shell_sum[cf->shell[i]] += cf->weights[i].real();
    shell_imag[cf->shell[i]] += cf->weights[i].imag();
  }
  std::vector<double> out(Lmax + 1, 0.0);
  double acc = 0.0;
  for (int m = 0; m <= Lmax; ++m) {
    acc += shell_sum[m];
    out[m] = acc;
  }
  return out;
}

inline double moment_sum(int L, ClosedVariant variant) {
  return moment_partial_sums(L, variant).back();
}

}  // namespace phif
