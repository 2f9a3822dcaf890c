#pragma once

#include <chrono>
#include <cmath>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "phif/hadamard.hpp"
#include "phif/zeros.hpp"

namespace phif {

struct CheckResult {
  std::string name;
  double observed = 0.0;
  double threshold = 0.0;
  bool pass = false;
  std::string note;
};

struct SuiteReport {
  std::string suite;
  std::vector<CheckResult> checks;
  double seconds = 0.0;

  SuiteReport() = default;
  explicit SuiteReport(std::string name) : suite(std::move(name)) {}

  bool passed() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

namespace detail {

class SuiteTimer {
 public:
  explicit SuiteTimer(SuiteReport& r) : report_(r) {}
  ~SuiteTimer() {
    report_.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start_)
            .count();
  }

 private:
  SuiteReport& report_;
  std::chrono::steady_clock::time_point start_ =
      std::chrono::steady_clock::now();
};

inline CheckResult check_below(std::string name, double observed,
                               double threshold, std::string note = {}) {
  return {std::move(name), observed, threshold, observed < threshold,
          std::move(note)};
}
inline CheckResult check_above(std::string name, double observed,
                               double threshold, std::string note = {}) {
  return {std::move(name), observed, threshold, observed > threshold,
          std::move(note)};
}

constexpr double two_phi_d = 3.23606797749978969;
constexpr double rho_order = 0.59023387877866735;  // ln 2 / ln(2 phi)

}  // namespace detail

// Paris constant by three independent routes; they must agree to 1e-10 and
// match the printed value C = 1.098... (the constant is 1.09864..., so the
// printed three decimals are a truncation, checked as such).
inline SuiteReport verify_paris(const EvalConfig& cfg = {}) {
  SuiteReport rep("paris");
  {
    detail::SuiteTimer t(rep);
    const ParisRoutes r = paris_constant_routes(cfg);
    std::ostringstream note;
    note.precision(15);
    note << "g-route " << r.via_g << ", sigma-route " << r.via_sigma
         << ", bisection " << r.via_bisection;
    rep.checks.push_back(
        detail::check_below("route-spread", r.spread, 1e-10, note.str()));
    const bool digits = std::floor(r.via_g * 1000.0) == 1098.0;
    rep.checks.push_back({"printed-digits-1.098", r.via_g, 1.099, digits,
                          "leading digits must match the printed value"});
  }
  rep.checks.push_back(
      detail::check_below("runtime-seconds", rep.seconds, 1.0));
  return rep;
}

// Max Poincare residual |f(2 phi z) - (f(z)^2 - 1)| over a 41x41 grid on the
// disk |z| <= (2 phi)^2.
inline SuiteReport verify_poincare(const EvalConfig& cfg = {}) {
  SuiteReport rep("poincare");
  detail::SuiteTimer t(rep);
  const double R = detail::two_phi_d * detail::two_phi_d;
  double worst = 0.0;
  for (int ix = 0; ix < 41; ++ix) {
    for (int iy = 0; iy < 41; ++iy) {
      const std::complex<double> z{-R + 2.0 * R * ix / 40.0,
                                   -R + 2.0 * R * iy / 40.0};
      if (std::abs(z) > R) continue;
      const auto lhs = eval_f(z * detail::two_phi_d, cfg);
      const auto rhs = eval_f(z, cfg);
      worst = std::max(worst, std::abs(lhs - (rhs * rhs - 1.0)));
    }
  }
  rep.checks.push_back(detail::check_below("max-grid-residual", worst, 1e-9));
  return rep;
}

// Inverse-function identities and the g-side functional equation.
inline SuiteReport verify_inverse(const EvalConfig& cfg = {}) {
  SuiteReport rep("inverse");
  detail::SuiteTimer t(rep);
  double w_gf = 0.0;
  for (int ix = -3; ix <= 3; ++ix)
    for (int iy = -3; iy <= 3; ++iy) {
      const std::complex<double> z{0.13 * ix, 0.13 * iy};
      w_gf = std::max(w_gf, std::abs(eval_g(eval_f(z, cfg), cfg) - z));
    }
  rep.checks.push_back(detail::check_below("g(f(z))=z", w_gf, cfg.tolerance));

  double w_fg = 0.0;
  for (const std::complex<double> w :
       {std::complex<double>{-0.9, 0.0}, {-0.5, 0.0}, {0.0, 0.0}, {0.5, 0.0},
        {1.0, 0.0}, {1.6, 0.0}, {2.0, 0.0}, {2.4, 0.0}, {1.2, 0.3},
        {0.5, -0.2}})
    w_fg = std::max(w_fg, std::abs(eval_f(eval_g(w, cfg), cfg) - w));
  rep.checks.push_back(detail::check_below("f(g(w))=w", w_fg, cfg.tolerance));

  const std::complex<double> w0{1.2, 0.0};
  const double chain =
      std::abs(eval_g_prime(w0, cfg) * eval_f_prime(eval_g(w0, cfg), cfg) - 1.0);
  rep.checks.push_back(
      detail::check_below("g'(w) f'(g(w)) = 1", chain, cfg.tolerance));

  double w_feq = 0.0;
  for (int i = 0; i < 25; ++i) {
    const double w = -0.99 + (2.6180339887 + 0.98) * i / 24.0;
    const std::complex<double> lhs = eval_g({w, 0.0}, cfg);
    const std::complex<double> rhs =
        detail::two_phi_d * eval_g(std::sqrt(std::complex<double>(1.0 + w)), cfg);
    w_feq = std::max(w_feq, std::abs(lhs - rhs));
  }
  rep.checks.push_back(detail::check_below("g(w) = 2 phi g(sqrt(1+w))", w_feq,
                                           cfg.tolerance));
  return rep;
}

// Exact coefficient properties: strict positivity for every n and the
// derivative bound n! |c_n| <= 1 for n >= 1, both as rational comparisons.
// (The bound's induction starts at f'(0) = 1; the n = 0 value is phi > 1.)
inline SuiteReport verify_coeffs(const EvalConfig& = {}, int N = 200) {
  SuiteReport rep("coeffs");
  detail::SuiteTimer t(rep);
  const TaylorTable tab = taylor_coeffs(N);
  int positivity_violations = 0, bound_violations = 0;
  Integer factorial(1);
  const QuadNum one(1);
  for (int n = 0; n <= N; ++n) {
    if (n > 0) factorial *= n;
    if (tab.coeffs[n].sign() <= 0) ++positivity_violations;
    if (n >= 1) {
      const QuadNum scaled = tab.coeffs[n] * QuadNum(Rational(factorial));
      if ((one - scaled).sign() < 0) ++bound_violations;
    }
  }
  const bool anchors = tab.coeffs[0] == QuadNum::phi() && tab.coeffs[1] == one;
  rep.checks.push_back({"anchors-phi-and-1", anchors ? 0.0 : 1.0, 0.5, anchors,
                        "c0 = phi, c1 = 1 exactly"});
  rep.checks.push_back({"positivity-violations", (double)positivity_violations,
                        0.5, positivity_violations == 0,
                        "f^(n)(0) > 0 for n <= " + std::to_string(N)});
  rep.checks.push_back({"derivative-bound-violations", (double)bound_violations,
                        0.5, bound_violations == 0,
                        "n! |c_n| <= 1 for 1 <= n <= " + std::to_string(N)});
  return rep;
}

// Primitive zeros of P_n for n <= n_max: every address must satisfy
// |P_n(y)| < 1e-9 with intermediates bounded away from zero; the distinct
// count 2^{n-1} is the paper's empirical claim and a mismatch is reported as
// a finding rather than a failure.
inline SuiteReport verify_primitive(const EvalConfig& = {}, int n_max = 12) {
  SuiteReport rep("primitive");
  detail::SuiteTimer t(rep);
  double max_pn = 0.0, min_pk = 1e300;
  std::string findings;
  for (int n = 2; n <= n_max; ++n) {
    const std::uint64_t total = 1ull << (n - 1);
    std::vector<std::complex<double>> values;
    values.reserve(total);
    std::vector<std::int8_t> word(n - 1, 1);
    for (std::uint64_t mask = 0; mask < total; ++mask) {
      for (int j = 0; j < n - 1; ++j)
        word[j] = (mask >> j) & 1u ? -1 : 1;
      const std::complex<double> y = to_std(detail::address_chain(word));
      std::complex<double> b = y;
      min_pk = std::min(min_pk, std::abs(y));
      for (int k = 1; k < n; ++k) {
        b = b * b - 1.0;
        min_pk = std::min(min_pk, std::abs(b));
      }
      max_pn = std::max(max_pn, std::abs(b * b - 1.0));
      values.push_back(y);
    }
    const int distinct = detail::count_distinct(values, 1e-10);
    if (distinct != (int)total)
      findings += " n=" + std::to_string(n) + ": " + std::to_string(distinct) +
                  " of " + std::to_string(total) + ";";
  }
  rep.checks.push_back(detail::check_below("max-|P_n(y)|", max_pn, 1e-9));
  rep.checks.push_back(detail::check_above(
      "min-intermediate-|P_k(y)|", min_pk, 1e-3,
      "measured minimum over all addresses (frozen floor 1e-3)"));
  rep.checks.push_back({"distinct-count-2^(n-1)", findings.empty() ? 0.0 : 1.0,
                        0.5, true,
                        findings.empty()
                            ? "2^(n-1) distinct values at every n <= " +
                                  std::to_string(n_max)
                            : "FINDING - distinct-count mismatch:" + findings});
  return rep;
}

// Simple-zero verification: residuals, simplicity witnesses, and the
// multiplicity-doubling proposition at (2 phi)^2 z0.
inline SuiteReport verify_simple_zeros(const EvalConfig& cfg = {}, int L = 10) {
  SuiteReport rep("multiplicity");
  detail::SuiteTimer t(rep);
  const auto recs = enumerate_simple_zeros(L, cfg);
  double max_res = 0.0, min_fp = 1e300;
  std::string argmin;
  for (const auto& r : recs) {
    max_res = std::max(max_res, r.residual);
    if (r.derivative_magnitude < min_fp) {
      min_fp = r.derivative_magnitude;
      argmin = r.seq.to_string() + " (ring " + std::to_string(r.ring) + ")";
    }
  }
  rep.checks.push_back(detail::check_below(
      "residual-max", max_res, 1e-8,
      std::to_string(recs.size()) + " zeros with prefix length <= " +
          std::to_string(L)));
  rep.checks.push_back(
      detail::check_above("fprime-magnitude-min", min_fp, 1e-4,
                          "attained at sigma " + argmin));

  EvalConfig doubling = cfg;
  doubling.tolerance = 1e-6;
  int violations = 0;
  for (const auto& r : recs)
    if (!multiplicity_doubling_check(r, doubling)) ++violations;
  rep.checks.push_back({"doubling-violations", (double)violations, 0.5,
                        violations == 0,
                        "f and f' both vanish at (2 phi)^2 z0 (tol 1e-6)"});
  return rep;
}

// Pairwise agreement of all six representations of f on random points in
// |z| <= 0.5, each within its own reported truncation bound.
inline SuiteReport verify_representations(const EvalConfig& cfg = {},
                                          int L = 12, int points = 50,
                                          unsigned seed = 20260809u) {
  SuiteReport rep("representations");
  detail::SuiteTimer t(rep);
  const HProduct h = HProduct::build(L, cfg);
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> unit(-0.5, 0.5);
  double worst_ratio = 0.0;
  int ambiguous = 0;
  for (int i = 0; i < points; ++i) {
    std::complex<double> z;
    do {
      z = {unit(rng), unit(rng)};
    } while (std::abs(z) > 0.5);
    Approx vals[6];
    const auto ef = eval_f_err(z, cfg);
    vals[0] = {ef.value, ef.error_bound};
    vals[1] = f_via_h(h, z);
    const auto fs = f_via_sqrt(h, z);
    vals[2] = {fs.value, fs.error_bound};
    if (fs.branch_ambiguous) ++ambiguous;
    vals[3] = f_via_wh(h, z, 8);
    vals[4] = closed_form_eval(z, L, ClosedVariant::theorem1);
    vals[5] = closed_form_eval(z, L, ClosedVariant::remark);
    for (int a = 0; a < 6; ++a)
      for (int b = a + 1; b < 6; ++b) {
        const double diff = std::abs(vals[a].value - vals[b].value);
        const double budget =
            vals[a].error_bound + vals[b].error_bound + 1e-12;
        worst_ratio = std::max(worst_ratio, diff / budget);
      }
  }
  rep.checks.push_back(detail::check_below(
      "max-pairwise-diff-over-bounds", worst_ratio, 1.0,
      std::to_string(points) + " random points, zero list L = " +
          std::to_string(L)));
  rep.checks.push_back({"sqrt-branch-ambiguities", (double)ambiguous, 0.5,
                        ambiguous == 0, "Re f > 0 throughout |z| <= 0.5"});
  return rep;
}

// First-moment identities, both radical chains. Convergence is geometric at
// rate 2/(2 phi) per prefix length; the spec tolerance 1e-5 is reached at the
// calibrated depths L = 20 (sqrt2 chain) and L = 22 (sqrt1 chain), with
// regression bounds frozen at L = 16 from the same calibration.
inline SuiteReport verify_moments(const EvalConfig& cfg = {}) {
  SuiteReport rep("moments");
  detail::SuiteTimer t(rep);
  const auto s2 = moment_partial_sums(20, ClosedVariant::theorem1);
  const auto s1 = moment_partial_sums(22, ClosedVariant::remark);
  rep.checks.push_back(detail::check_below(
      "sqrt2-identity-at-L20", std::abs(s2[20] - 1.0), 1e-5));
  rep.checks.push_back(detail::check_below(
      "sqrt1-identity-at-L22", std::abs(s1[22] - 1.0), 1e-5));
  rep.checks.push_back(detail::check_below(
      "sqrt2-regression-at-L16", std::abs(s2[16] - 1.0), 6e-5,
      "calibrated regression bound (measured 4.71e-5)"));
  rep.checks.push_back(detail::check_below(
      "sqrt1-regression-at-L16", std::abs(s1[16] - 1.0), 1.6e-4,
      "calibrated regression bound (measured 1.23e-4)"));
  const double C = paris_constant(cfg);
  rep.checks.push_back(detail::check_below(
      "L0-term-equals-1/C", std::abs(s2[0] - 1.0 / C), 1e-10));
  double worst_ratio = 0.0;
  for (int m = 8; m < 20; ++m) {
    const double d1 = std::abs(s2[m] - s2[m - 1]);
    const double d2 = std::abs(s2[m + 1] - s2[m]);
    if (d1 > 0.0) worst_ratio = std::max(worst_ratio, d2 / d1);
  }
  rep.checks.push_back(detail::check_below(
      "cauchy-shell-ratio-max", worst_ratio, 0.75,
      "successive shell increments shrink geometrically (~0.618)"));
  return rep;
}

// Growth and order: ring occupancy doubling across S_10..S_14 and the
// log-log max-modulus slope over circles |z| = (2 phi)^n.
inline SuiteReport verify_order(const EvalConfig& cfg = {}) {
  SuiteReport rep("order");
  detail::SuiteTimer t(rep);
  const auto values = enumerate_zero_values(17);
  int counts[16] = {0};
  for (const auto& v : values)
    if (v.ring >= 0 && v.ring < 16) ++counts[v.ring];
  double worst = 0.0;
  std::ostringstream occ;
  for (int r = 10; r < 14; ++r) {
    const double ratio = (double)counts[r + 1] / (double)counts[r];
    occ << "S" << r + 1 << "/S" << r << "=" << ratio << " ";
    worst = std::max(worst, std::abs(ratio - 2.0));
  }
  rep.checks.push_back(detail::check_below("occupancy-ratio-max-|r-2|", worst,
                                           0.3, occ.str()));

  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const int cnt = 7;
  for (int n = 2; n <= 8; ++n) {
    const double r = two_phi_pow_d(n);
    double mx = 0.0;
    for (int j = 0; j < 64; ++j) {
      const double th = 2.0 * 3.14159265358979324 * j / 64.0;
      mx = std::max(mx,
                    std::abs(eval_f({r * std::cos(th), r * std::sin(th)}, cfg)));
    }
    const double x = n * std::log(detail::two_phi_d);
    const double y = std::log(std::log(mx));
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double slope = (cnt * sxy - sx * sy) / (cnt * sxx - sx * sx);
  rep.checks.push_back(detail::check_below(
      "order-slope-relative-deviation",
      std::abs(slope - detail::rho_order) / detail::rho_order, 0.10,
      "slope " + std::to_string(slope) + " vs ln2/ln(2 phi) = " +
          std::to_string(detail::rho_order)));
  return rep;
}

// Desk-scale cloud: nonempty and every emitted point lies in its tagged ring.
inline SuiteReport verify_cloud(const EvalConfig& = {}, int n = 20, int n1 = 8,
                                std::uint64_t budget = 1ull << 24) {
  SuiteReport rep("cloud");
  detail::SuiteTimer t(rep);
  const auto pts = approx_zero_cloud(n, n1, budget);
  rep.checks.push_back(detail::check_above(
      "points-emitted", (double)pts.size(), 0.0,
      "cloud(" + std::to_string(n) + ", " + std::to_string(n1) + ")"));
  int violations = 0;
  for (const auto& p : pts) {
    const double m = std::abs(p.value);
    const double lo = two_phi_pow_d(p.ring), hi = two_phi_pow_d(p.ring + 1);
    if (!(m > lo * (1.0 - 1e-9) && m <= hi * (1.0 + 1e-9))) ++violations;
  }
  rep.checks.push_back({"ring-tag-violations", (double)violations, 0.5,
                        violations == 0, "recomputed |z| against ring bounds"});
  return rep;
}

inline std::vector<std::string> verify_suite_names() {
  return {"paris",        "poincare", "inverse", "representations",
          "moments",      "multiplicity", "order",   "coeffs",
          "primitive",    "cloud"};
}

inline SuiteReport run_verify_suite(const std::string& name,
                                    const EvalConfig& cfg = {}) {
  if (name == "paris") return verify_paris(cfg);
  if (name == "poincare") return verify_poincare(cfg);
  if (name == "inverse") return verify_inverse(cfg);
  if (name == "representations") return verify_representations(cfg);
  if (name == "moments") return verify_moments(cfg);
  if (name == "multiplicity" || name == "zeros") return verify_simple_zeros(cfg);
  if (name == "order") return verify_order(cfg);
  if (name == "coeffs") return verify_coeffs(cfg);
  if (name == "primitive") return verify_primitive(cfg);
  if (name == "cloud") return verify_cloud(cfg);
  throw std::invalid_argument("unknown verify suite '" + name + "'");
}

inline std::string format_report(const SuiteReport& rep) {
  std::ostringstream os;
  os.precision(6);
  for (const auto& c : rep.checks) {
    os << (c.pass ? "[PASS] " : "[FAIL] ") << rep.suite << "/" << c.name
       << ": observed " << c.observed << " vs threshold " << c.threshold;
    if (!c.note.empty()) os << "  (" << c.note << ")";
    os << "\n";
  }
  os << (rep.passed() ? "[PASS] " : "[FAIL] ") << rep.suite << " suite, "
     << rep.seconds << " s\n";
  return os.str();
}

}  // namespace phif
