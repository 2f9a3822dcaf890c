#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <future>
#include <stdexcept>
#include <string>
#include <vector>

#include "phif/eval.hpp"
#include "phif/signseq.hpp"

namespace phif {

struct BudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct PrimitivityRejection : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct SimplicityViolation : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct CrossCheckFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline double two_phi_pow_d(int n) {
  return std::pow(3.23606797749978969, n);
}

// Ring S_n = { z : (2 phi)^n < |z| <= (2 phi)^{n+1} }, half-open exactly as
// printed; boundary points belong to the lower ring.
inline int ring_index(double modulus) {
  if (!(modulus > 0.0))
    throw std::domain_error("ring_index: modulus must be positive");
  int n = (int)std::ceil(std::log(modulus) / 1.17435857056293308) - 1;
  while (modulus > two_phi_pow_d(n + 1)) ++n;
  while (n > -4000 && modulus <= two_phi_pow_d(n)) --n;
  return n;
}

// A verified simple zero of f addressed by its sign sequence.
struct ZeroRecord {
  std::complex<double> value;
  SignSeq seq;  // sigma convention, canonical prefix
  int ring = 0;
  double residual = 0.0;              // |f(value)|
  double derivative_magnitude = 0.0;  // |f'(value)|
};

// ---------------------------------------------------------------------------
// Primitive zeros of P_n = (z^2-1)^(n o)
// ---------------------------------------------------------------------------

namespace detail {

// Radical chain of a primitive-zero address, innermost-out:
//   A_{n-1} = s_{n-1} sqrt2,  A_k = s_k sqrt(1 + A_{k+1}),  y = A_1.
// Principal branch at every level.
template <class R>
cx<R> address_chain_t(const std::vector<std::int8_t>& s) {
  const int len = (int)s.size();
  cx<R> a = cx<R>(real_sqrt(R(2)));
  if (s[len - 1] < 0) a = -a;
  for (int k = len - 2; k >= 0; --k) {
    a = sqrt_cx(R(1) + a);
    if (s[k] < 0) a = -a;
  }
  return a;
}

inline cx<double> address_chain(const std::vector<std::int8_t>& s) {
  return address_chain_t<double>(s);
}

// P_n(y) must vanish while P_k(y), k < n, stays away from zero. Returns the
// smallest |P_k(y)| over k < n through min_pk.
inline bool primitive_check(std::complex<double> y, int n, double tol,
                            double reject_floor, double* min_pk = nullptr) {
  std::complex<double> b = y;
  double lo = std::abs(y);
  for (int k = 1; k < n; ++k) {
    b = b * b - 1.0;
    lo = std::min(lo, std::abs(b));
  }
  if (min_pk) *min_pk = lo;
  b = b * b - 1.0;  // P_n(y)
  return std::abs(b) < tol && lo > reject_floor;
}

// Double rounding alone grows |P_n(y)| by about (2 phi)^n eps, which crosses
// tight tolerances near n = 14; before rejecting, recheck the candidate on
// the 113-bit tier, where a true primitive sits ~1e-27 from zero while a
// genuine non-primitive stays O(1) away.
inline bool primitive_check_escalated(const std::vector<std::int8_t>& word,
                                      int n, double tol, double reject_floor,
                                      double* min_pk = nullptr) {
  const std::complex<double> y = to_std(address_chain(word));
  if (primitive_check(y, n, tol, reject_floor, min_pk)) return true;
  const cx<F113> yh = address_chain_t<F113>(word);
  cx<F113> b = yh;
  F113 lo = abs_cx(yh);
  for (int k = 1; k < n; ++k) {
    b = b * b - F113(1);
    lo = (std::min)(lo, abs_cx(b));
  }
  b = b * b - F113(1);
  if (min_pk) *min_pk = to_double(lo);
  return to_double(abs_cx(b)) < tol && to_double(lo) > reject_floor;
}

}  // namespace detail

// Evaluates the nested radical y(s) for an address of P_n and verifies
// primitivity numerically; rejects on a branch-choice mismatch.
inline std::complex<double> y_of_s(const SignSeq& s, int n, double tol = 1e-9,
                                   double reject_floor = 1e-6) {
  if (s.kind != SeqKind::primitive_address)
    throw std::invalid_argument("y_of_s: expected a primitive-zero address");
  if (n < 2 || (int)s.word.size() != n - 1)
    throw std::invalid_argument("y_of_s: address length must be n-1, n >= 2");
  s.validate();
  const std::complex<double> y = to_std(detail::address_chain(s.word));
  if (!detail::primitive_check_escalated(s.word, n, tol, reject_floor))
    throw PrimitivityRejection(
        "y_of_s: candidate failed the primitivity check (|P_n| or min |P_k| "
        "out of tolerance) for address " +
        s.to_string());
  return y;
}

struct PrimitiveZeroSet {
  std::vector<std::complex<double>> values;  // in address order
  int distinct_count = 0;
  int rejected = 0;
  double min_intermediate = 0.0;  // smallest |P_k(y)| seen, k < n
};

namespace detail {

inline int count_distinct(std::vector<std::complex<double>> v, double tol) {
  std::sort(v.begin(), v.end(), [](auto a, auto b) {
    return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
  });
  int distinct = 0;
  std::vector<bool> dup(v.size(), false);
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (dup[i]) continue;
    ++distinct;
    for (std::size_t j = i + 1;
         j < v.size() && v[j].real() - v[i].real() <= tol; ++j)
      if (std::abs(v[j] - v[i]) <= tol) dup[j] = true;
  }
  return distinct;
}

}  // namespace detail

// All 2^{n-1} candidate addresses of P_n; rejections are counted, never
// silently dropped values.
inline PrimitiveZeroSet primitive_zeros(int n, double tol = 1e-10,
                                        int depth_limit = 20) {
  if (n < 2 || n > depth_limit)
    throw std::invalid_argument("primitive_zeros: need 2 <= n <= depth limit");
  PrimitiveZeroSet out;
  const std::uint64_t total = 1ull << (n - 1);
  out.values.reserve(total);
  out.min_intermediate = 1e300;
  std::vector<std::int8_t> word(n - 1, 1);
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    for (int j = 0; j < n - 1; ++j)
      word[j] = (mask >> j) & 1u ? -1 : 1;
    double min_pk = 0.0;
    if (detail::primitive_check_escalated(word, n, std::max(tol, 1e-9), 1e-6,
                                          &min_pk)) {
      out.values.push_back(to_std(detail::address_chain(word)));
      out.min_intermediate = std::min(out.min_intermediate, min_pk);
    } else {
      ++out.rejected;
    }
  }
  out.distinct_count = detail::count_distinct(out.values, std::max(tol, 1e-12));
  return out;
}

// ---------------------------------------------------------------------------
// Simple zeros from sign sequences:
//   z0(sigma) = -2 prod_{m>=1} 2 phi / (phi + sigma_m U_m),
//   U_1 = sqrt2, U_{m+1} = sqrt(1 + sigma_m U_m),
// with the all-+1 tail converging to the fixed point phi (factors -> 1).
// ---------------------------------------------------------------------------

namespace detail {

// Walks every canonical sigma prefix with the last -1 at position <= L
// (2^L sequences including the empty one) in a fixed depth-first order,
// completing each with its all-+1 tail.
//
// reciprocal == false : factors 2 phi / (phi + s U)   (zero products)
// reciprocal == true  : factors (phi + s U) / (2 phi) (inverse-zero weights)
//
// innermost: U_1 (sqrt2 for the zero set; 1 for the multiplicity-aware
// variant, where a radicand may hit exactly 0 and the chain continues
// through it).
template <class R, class Emit>
void walk_sigma(int L, bool reciprocal, cx<R> innermost, Emit&& emit) {
  if (L < 0) throw std::invalid_argument("walk_sigma: negative depth");
  const R& ph = const_phi<R>();
  const R& tph = const_two_phi<R>();
  const R eps = real_eps<R>();

  auto factor = [&](const cx<R>& sU) {
    return reciprocal ? (ph + sU) / tph : tph / (ph + sU);
  };
  // Stop once the chain is within a few ulp of phi: the remaining factors
  // differ from 1 by less than machine tolerance. (The distance stalls at
  // rounding level, never at zero.)
  const R stop_sq = R(16) * eps * eps;
  auto complete = [&](cx<R> U, cx<R> prod) {
    for (int it = 0; it < 2000; ++it) {
      if (norm_sq(U - ph) < stop_sq) break;
      prod = prod * factor(U);
      U = sqrt_cx(R(1) + U);
    }
    return prod;
  };

  std::vector<std::int8_t> sigma;
  sigma.reserve(L);
  std::function<void(const cx<R>&, const cx<R>&, int)> rec =
      [&](const cx<R>& U, const cx<R>& prod, int depth) {
        if (depth >= L) return;
        for (int s : {+1, -1}) {
          const cx<R> sU = s > 0 ? U : -U;
          const cx<R> prod2 = prod * factor(sU);
          const cx<R> U2 = sqrt_cx(R(1) + sU);
          sigma.push_back((std::int8_t)s);
          if (s < 0) emit(sigma, complete(U2, prod2));
          rec(U2, prod2, depth + 1);
          sigma.pop_back();
        }
      };

  emit(sigma, complete(innermost, cx<R>(R(1))));  // empty prefix (all +1)
  rec(innermost, cx<R>(R(1)), 0);
}

template <class R>
cx<R> sqrt2_c() {
  return cx<R>(real_sqrt(R(2)));
}

// Single-sigma zero product on tier R; fixed_depth < 0 means machine-eps
// adaptive truncation, otherwise exactly fixed_depth factors.
template <class R>
cx<R> z0_product(const std::vector<std::int8_t>& sigma, int fixed_depth) {
  const R& ph = const_phi<R>();
  const R& tph = const_two_phi<R>();
  const R eps = real_eps<R>();
  const R stop_sq = R(16) * eps * eps;
  cx<R> U = sqrt2_c<R>();
  cx<R> prod(R(1));
  const int m = (int)sigma.size();
  const int limit = fixed_depth >= 0 ? fixed_depth : m + 2000;
  for (int n = 1; n <= limit; ++n) {
    if (fixed_depth < 0 && n > m && norm_sq(U - ph) < stop_sq) break;
    const cx<R> sU = (n <= m && sigma[n - 1] < 0) ? -U : U;
    prod = prod * tph / (ph + sU);
    U = sqrt_cx(R(1) + sU);
  }
  return cx<R>(R(-2)) * prod;
}

}  // namespace detail

// Zero value alone (113-bit working tier), adaptive truncation: the tail
// factors are cut once they differ from 1 by less than machine epsilon.
inline std::complex<double> z0_value(const SignSeq& sigma) {
  if (sigma.kind != SeqKind::sigma_prefix || !sigma.canonical())
    throw std::invalid_argument("z0_value: expected a canonical sigma prefix");
  return to_std(detail::z0_product<F113>(sigma.word, -1));
}

// Fixed-depth variant used for truncation self-consistency tests.
inline std::complex<double> z0_value_at_depth(const SignSeq& sigma, int depth) {
  if (sigma.kind != SeqKind::sigma_prefix)
    throw std::invalid_argument("z0_value_at_depth: expected sigma prefix");
  if (depth < (int)sigma.word.size())
    throw std::invalid_argument("z0_value_at_depth: depth shorter than prefix");
  return to_std(detail::z0_product<double>(sigma.word, depth));
}

namespace detail {

inline ZeroRecord finish_zero_record(SignSeq sigma, std::complex<double> z,
                                     const EvalConfig& cfg) {
  ZeroRecord rec;
  rec.seq = std::move(sigma);
  rec.value = z;
  rec.ring = ring_index(std::abs(z));
  rec.residual = std::abs(eval_f(z, cfg));
  // The derivative has no cancellation at a simple zero, so the double tier
  // normally suffices; escalate only if its own error bound is too weak to
  // decide the simplicity test.
  auto pe = detail::eval_f_prime_tier<double>(from_std<double>(z), cfg);
  double mag = to_double(abs_cx(pe.value));
  if (pe.err > 0.05 * std::max(mag, cfg.tolerance)) {
    const auto hi = eval_f_prime_err(z, cfg);
    mag = std::abs(hi.value);
  }
  rec.derivative_magnitude = mag;
  // Rounding z0 itself to a double already moves f by ~|f'| * eps * |z0|;
  // the residual gate cannot be tighter than that representation floor.
  const double floor =
      16.0 * 2.220446049250313e-16 * std::abs(z) * std::max(1.0, mag);
  if (!(rec.residual < std::max(cfg.tolerance, floor)))
    throw SimplicityViolation(
        "z0_of_sigma: residual |f(z0)| = " + std::to_string(rec.residual) +
        " exceeds tolerance for sigma " + rec.seq.to_string() +
        " (insufficient depth?)");
  if (!(rec.derivative_magnitude > cfg.tolerance))
    throw SimplicityViolation(
        "z0_of_sigma: |f'(z0)| = " + std::to_string(rec.derivative_magnitude) +
        " is not bounded away from zero for sigma " + rec.seq.to_string());
  return rec;
}

}  // namespace detail

// Verified simple zero for one sigma.
inline ZeroRecord z0_of_sigma(const SignSeq& sigma, const EvalConfig& cfg = {}) {
  cfg.validate();
  return detail::finish_zero_record(sigma, z0_value(sigma), cfg);
}

// All verified zeros with the last -1 at position <= L, sorted by modulus.
inline std::vector<ZeroRecord> enumerate_simple_zeros(int L,
                                                      const EvalConfig& cfg = {}) {
  cfg.validate();
  if (L < 0 || L > 24)
    throw std::invalid_argument("enumerate_simple_zeros: need 0 <= L <= 24");
  std::vector<std::pair<SignSeq, std::complex<double>>> raw;
  raw.reserve(1ull << L);
  detail::walk_sigma<F113>(
      L, false, detail::sqrt2_c<F113>(),
      [&](const std::vector<std::int8_t>& sigma, const cx<F113>& prod) {
        raw.emplace_back(SignSeq{SeqKind::sigma_prefix, sigma},
                         to_std(cx<F113>(F113(-2)) * prod));
      });
  std::vector<ZeroRecord> out;
  out.reserve(raw.size());
  for (auto& [sigma, z] : raw)
    out.push_back(detail::finish_zero_record(std::move(sigma), z, cfg));
  std::sort(out.begin(), out.end(), [](const ZeroRecord& a, const ZeroRecord& b) {
    const double ma = std::abs(a.value), mb = std::abs(b.value);
    if (ma != mb) return ma < mb;
    if (a.value.real() != b.value.real())
      return a.value.real() < b.value.real();
    return a.value.imag() < b.value.imag();
  });
  return out;
}

// Value-and-ring-only enumeration on the double tier; used where thousands
// of zeros are needed for statistics rather than certified residuals.
struct ZeroValue {
  std::complex<double> value;
  int ring = 0;
};

inline std::vector<ZeroValue> enumerate_zero_values(int L) {
  if (L < 0 || L > 24)
    throw std::invalid_argument("enumerate_zero_values: need 0 <= L <= 24");
  std::vector<ZeroValue> out;
  out.reserve(1ull << L);
  detail::walk_sigma<double>(
      L, false, detail::sqrt2_c<double>(),
      [&](const std::vector<std::int8_t>&, const cx<double>& prod) {
        const std::complex<double> z = to_std(cx<double>(-2.0) * prod);
        out.push_back({z, ring_index(std::abs(z))});
      });
  std::sort(out.begin(), out.end(), [](const ZeroValue& a, const ZeroValue& b) {
    const double ma = std::abs(a.value), mb = std::abs(b.value);
    if (ma != mb) return ma < mb;
    if (a.value.real() != b.value.real())
      return a.value.real() < b.value.real();
    return a.value.imag() < b.value.imag();
  });
  return out;
}

// Doubling proposition witness: (2 phi)^2 z0 must be a zero of both f and f'
// when z0 is a zero (multiplicity m doubles to 2m, so the scaled point can
// never stay simple).
inline bool multiplicity_doubling_check(const ZeroRecord& rec,
                                        const EvalConfig& cfg = {}) {
  cfg.validate();
  const std::complex<double> z2 = rec.value * 10.4721359549995794;  // (2phi)^2
  if (std::abs(eval_f(z2, cfg)) >= cfg.tolerance) return false;
  // Double-tier derivative first; its bound decides whether escalation is
  // needed (it rarely is: no cancellation sits behind this magnitude).
  const auto pe = detail::eval_f_prime_tier<double>(from_std<double>(z2), cfg);
  const double mag = to_double(abs_cx(pe.value));
  if (to_double(pe.err) <= 0.1 * cfg.tolerance)
    return mag < cfg.tolerance;
  return std::abs(eval_f_prime(z2, cfg)) < cfg.tolerance;
}

// ---------------------------------------------------------------------------
// Paris constant
// ---------------------------------------------------------------------------

struct ParisRoutes {
  double via_g = 0.0;          // -g(0)/2
  double via_sigma = 0.0;      // -z0(all +1)/2
  double via_bisection = 0.0;  // negative root of f on (-3, 0)
  double spread = 0.0;         // max pairwise disagreement
};

inline ParisRoutes paris_constant_routes(const EvalConfig& cfg = {}) {
  cfg.validate();
  ParisRoutes r;
  r.via_g = -0.5 * eval_g({0.0, 0.0}, cfg).real();
  r.via_sigma = -0.5 * z0_value(SignSeq::sigma({})).real();

  double lo = -3.0, hi = 0.0;
  double flo = eval_f({lo, 0.0}, cfg).real();
  const double fhi = eval_f({hi, 0.0}, cfg).real();
  if (!(flo < 0.0 && fhi > 0.0))
    throw CrossCheckFailure("paris_constant: bracket (-3, 0) lost its sign change");
  for (int it = 0; it < 200 && hi - lo > 1e-15; ++it) {
    const double mid = 0.5 * (lo + hi);
    const double fm = eval_f({mid, 0.0}, cfg).real();
    if (fm == 0.0) {
      lo = hi = mid;
      break;
    }
    if ((fm < 0.0) == (flo < 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  r.via_bisection = -0.25 * (lo + hi);
  r.spread = std::max({std::abs(r.via_g - r.via_sigma),
                       std::abs(r.via_g - r.via_bisection),
                       std::abs(r.via_sigma - r.via_bisection)});
  return r;
}

inline double paris_constant(const EvalConfig& cfg = {}) {
  const ParisRoutes r = paris_constant_routes(cfg);
  if (!(r.spread <= std::max(cfg.tolerance, 1e-10)))
    throw CrossCheckFailure("paris_constant: routes disagree by " +
                            std::to_string(r.spread));
  return r.via_g;
}

// (2 phi)^n (phi - phi_n) for phi_1 = 1, phi_{n+1} = sqrt(1 + phi_n).
// Converges to 2C; evaluated on a wide tier because phi - phi_n cancels
// catastrophically long before the sequence settles.
inline std::vector<double> nested_convergence(int n_max) {
  if (n_max < 1) throw std::invalid_argument("nested_convergence: n_max >= 1");
  using R = F256;
  const R& ph = const_phi<R>();
  const R& tph = const_two_phi<R>();
  std::vector<double> out;
  out.reserve(n_max);
  R phi_n(1);
  R pw(1);
  for (int n = 1; n <= n_max; ++n) {
    pw = pw * tph;
    out.push_back(to_double(pw * (ph - phi_n)));
    phi_n = real_sqrt(R(1) + phi_n);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Approximate zero clouds (Julia-set pictures)
// ---------------------------------------------------------------------------

struct CloudPoint {
  std::complex<double> value;
  int ring = 0;
};

namespace detail {

struct CloudWalker {
  int n = 0;
  double lower = 0, upper = 0, scale = 0, btol = 1e-9;
  int base_ring = 0;
  std::vector<CloudPoint>* out = nullptr;

  void leaf(const cx<double>& y) const {
    static constexpr double phi_d = 1.61803398874989485;
    const cx<double> d{y.re - phi_d, y.im};
    const double m = abs_cx(d);
    if (!(m > lower * (1.0 - btol)) || !(m <= upper * (1.0 + btol))) return;
    const std::complex<double> z{d.re * scale, d.im * scale};
    const bool near_lower = std::abs(m - lower) <= lower * btol;
    const bool near_upper = std::abs(m - upper) <= upper * btol;
    if (near_lower) out->push_back({z, base_ring - 1});
    out->push_back({z, base_ring});
    if (near_upper) out->push_back({z, base_ring + 1});
  }

  void rec(const cx<double>& a, int depth) const {
    if (depth == n - 1) {
      leaf(a);
      return;
    }
    const cx<double> r = sqrt_cx(cx<double>(1.0) + a);
    rec(r, depth + 1);
    rec(-r, depth + 1);
  }
};

}  // namespace detail

// Enumerates primitive-zero addresses of P_n depth-first (one square root
// per interior node, O(n) live state), keeps y with y - phi in the annulus
// (2 phi)^{-n1} < |y - phi| <= (2 phi)^{-n1+1}, and maps each to the
// approximate simple zero (2 phi)^n (y - phi) in ring S_{n-n1}. Points
// within relative tolerance of an annulus boundary are emitted under both
// candidate ring tags.
inline std::vector<CloudPoint> approx_zero_cloud(int n, int n1,
                                                 std::uint64_t budget = 1ull << 24,
                                                 int threads = 1) {
  if (n1 < 2 || n < n1)
    throw std::invalid_argument("approx_zero_cloud: need n >= n1 >= 2");
  if (n > 40) throw std::invalid_argument("approx_zero_cloud: n too large");
  const std::uint64_t nodes = (1ull << n) - 2;
  if (nodes > budget)
    throw BudgetExceeded(
        "approx_zero_cloud: address tree has " + std::to_string(nodes) +
        " nodes, budget is " + std::to_string(budget) +
        " (raise --budget to run at this depth)");

  std::vector<CloudPoint> out;
  detail::CloudWalker base{n,
                           two_phi_pow_d(-n1),
                           two_phi_pow_d(-n1 + 1),
                           two_phi_pow_d(n),
                           1e-9,
                           n - n1,
                           &out};
  const cx<double> root(std::sqrt(2.0));

  if (threads <= 1 || n < 8) {
    base.rec(root, 1);
    base.rec(-root, 1);
  } else {
    // Expand the top of the tree serially, then walk subtrees in parallel;
    // the canonical sort below keeps the output order independent of the
    // execution schedule.
    int split = 1;
    while ((1 << split) < 4 * threads && split < n - 2) ++split;
    std::vector<cx<double>> seeds{root, -root};
    for (int d = 1; d < split; ++d) {
      std::vector<cx<double>> next;
      next.reserve(seeds.size() * 2);
      for (const auto& a : seeds) {
        const cx<double> r = sqrt_cx(cx<double>(1.0) + a);
        next.push_back(r);
        next.push_back(-r);
      }
      seeds.swap(next);
    }
    std::vector<std::future<std::vector<CloudPoint>>> tasks;
    tasks.reserve(seeds.size());
    for (const auto& seed : seeds)
      tasks.push_back(std::async(std::launch::async, [seed, split, base]() {
        std::vector<CloudPoint> local;
        detail::CloudWalker w = base;
        w.out = &local;
        w.rec(seed, split);
        return local;
      }));
    for (auto& t : tasks) {
      auto local = t.get();
      out.insert(out.end(), local.begin(), local.end());
    }
  }

  std::sort(out.begin(), out.end(), [](const CloudPoint& a, const CloudPoint& b) {
    if (a.ring != b.ring) return a.ring < b.ring;
    if (a.value.real() != b.value.real())
      return a.value.real() < b.value.real();
    return a.value.imag() < b.value.imag();
  });
  return out;
}

}  // namespace phif
