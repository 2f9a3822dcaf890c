#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>

#include "phif/eval.hpp"
#include "phif/zeros.hpp"

using phif::EvalConfig;
using std::complex;

namespace {
constexpr double two_phi = 3.23606797749978969;
const EvalConfig cfg{};
}  // namespace

TEST_CASE("p_iterate", "[eval]") {
  const complex<double> w{0.3, -0.8};
  CHECK(phif::p_iterate(w, 0) == w);

  CHECK(std::abs(phif::p_iterate({std::sqrt(2.0), 0.0}, 2)) < 1e-14);

  // y^2 - 1 = sqrt2, then 1, then 0.
  const complex<double> y{std::sqrt(1.0 + std::sqrt(2.0)), 0.0};
  CHECK(std::abs(phif::p_iterate(y, 1) - complex<double>{std::sqrt(2.0), 0.0}) <
        1e-14);
  CHECK(std::abs(phif::p_iterate(y, 3)) < 1e-13);

  CHECK_THROWS_AS(phif::p_iterate(w, -1), std::invalid_argument);
}

TEST_CASE("f at the origin and the functional equation", "[eval]") {
  const auto f0 = phif::eval_f_err({0.0, 0.0}, cfg);
  CHECK(f0.value.real() == Catch::Approx(1.6180339887498949).margin(1e-14));
  CHECK(f0.value.imag() == 0.0);
  CHECK(f0.error_bound < 1e-20);

  const complex<double> z{0.1, 0.0};
  const auto lhs = phif::eval_f(z * two_phi, cfg);
  const auto rhs = phif::eval_f(z, cfg);
  CHECK(std::abs(lhs - (rhs * rhs - 1.0)) < cfg.tolerance);
}

TEST_CASE("f vanishes at -2C", "[eval]") {
  const double C = phif::paris_constant(cfg);
  CHECK(std::abs(phif::eval_f({-2.0 * C, 0.0}, cfg)) < 1e-9);
}

TEST_CASE("functional-equation residual on a complex grid out to (2 phi)^3",
          "[eval]") {
  const double R = two_phi * two_phi * two_phi;
  double worst = 0.0;
  for (int ix = -4; ix <= 4; ++ix)
    for (int iy = -4; iy <= 4; ++iy) {
      const complex<double> z{R * ix / 4.0, R * iy / 4.0};
      if (std::abs(z) > R) continue;
      worst = std::max(worst, phif::poincare_residual(z, cfg));
    }
  CHECK(worst < cfg.tolerance);
}

TEST_CASE("f' at 0 and against independent oracles", "[eval]") {
  const auto fp0 = phif::eval_f_prime_err({0.0, 0.0}, cfg);
  CHECK(fp0.value.real() == Catch::Approx(1.0).margin(1e-13));
  CHECK(fp0.error_bound < 1e-12);

  // Term-by-term derivative of the Taylor table at z = 0.3 (Horner on
  // sum_n n c_n z^{n-1}).
  const auto coef = phif::taylor_coeffs_real<double>(cfg.series_cutoff);
  double oracle = 0.0;
  for (int n = (int)coef->size() - 1; n >= 1; --n)
    oracle = oracle * 0.3 + n * (*coef)[n];
  CHECK(phif::eval_f_prime({0.3, 0.0}, cfg).real() ==
        Catch::Approx(oracle).margin(1e-10));

  // Central difference at z = 0.5.
  const double h = 1e-6;
  const auto fd = (phif::eval_f({0.5 + h, 0.0}, cfg) -
                   phif::eval_f({0.5 - h, 0.0}, cfg)) /
                  (2.0 * h);
  CHECK(std::abs(phif::eval_f_prime({0.5, 0.0}, cfg) - fd) < 1e-8);
}

TEST_CASE("g at its anchor points", "[eval]") {
  const double phi = 1.61803398874989485;
  CHECK(std::abs(phif::eval_g({phi, 0.0}, cfg)) < 1e-13);

  const double C = phif::paris_constant(cfg);
  CHECK(phif::eval_g({0.0, 0.0}, cfg).real() ==
        Catch::Approx(-2.0 * C).margin(1e-11));

  // Inverse identities.
  const complex<double> z{0.2, 0.0};
  CHECK(std::abs(phif::eval_g(phif::eval_f(z, cfg), cfg) - z) < cfg.tolerance);

  CHECK(phif::eval_g_prime({phi, 0.0}, cfg).real() ==
        Catch::Approx(1.0).margin(1e-13));

  // Finite difference of g at 0.
  const double h = 1e-6;
  const auto gd =
      (phif::eval_g({h, 0.0}, cfg) - phif::eval_g({-h, 0.0}, cfg)) / (2.0 * h);
  CHECK(std::abs(phif::eval_g_prime({0.0, 0.0}, cfg) - gd) < 1e-8);

  // Chain rule at w = 1.2.
  const complex<double> w{1.2, 0.0};
  CHECK(std::abs(phif::eval_g_prime(w, cfg) *
                     phif::eval_f_prime(phif::eval_g(w, cfg), cfg) -
                 1.0) < cfg.tolerance);
}

TEST_CASE("g domain handling", "[eval]") {
  // The radical iteration contracts toward phi from any finite start (the
  // first square root collapses even huge moduli), so the operational domain
  // check passes here; the product value stays finite.
  CHECK_NOTHROW(phif::eval_g({1e30, 0.0}, cfg));
  CHECK(std::isfinite(phif::eval_g({1e30, 0.0}, cfg).real()));
  // With the depth cut short the iteration cannot reach the fixed point and
  // the domain check fires.
  EvalConfig shallow = cfg;
  shallow.product_depth = 3;
  CHECK_THROWS_AS(phif::eval_g({1e6, 0.0}, shallow), std::domain_error);
  // g'(-1) hits the zero radical.
  CHECK_THROWS_AS(phif::eval_g_prime({-1.0, 0.0}, cfg), std::domain_error);
  // g(-1) itself is finite.
  CHECK_NOTHROW(phif::eval_g({-1.0, 0.0}, cfg));
}

TEST_CASE("g-side functional equation g(w) = 2 phi g(sqrt(1+w))", "[eval]") {
  for (int i = 0; i < 12; ++i) {
    const double w = -0.95 + i * 0.3;  // inside (-1, phi^2)
    const auto lhs = phif::eval_g({w, 0.0}, cfg);
    const auto rhs =
        two_phi * phif::eval_g(std::sqrt(std::complex<double>(1.0 + w)), cfg);
    CHECK(std::abs(lhs - rhs) < cfg.tolerance);
  }
  // f(g(w)) = w off the real axis as well.
  for (const complex<double> w : {complex<double>{1.2, 0.3}, {0.4, -0.5}}) {
    CHECK(std::abs(phif::eval_f(phif::eval_g(w, cfg), cfg) - w) <
          cfg.tolerance);
  }
}

TEST_CASE("reported error bounds dominate cross-precision differences",
          "[eval]") {
  EvalConfig hi = cfg;
  hi.precision = 160;
  for (const complex<double> z :
       {complex<double>{0.4, 0.2}, {3.0, -1.0}, {30.0, 10.0}, {-2.196, 0.0}}) {
    const auto lo_r = phif::eval_f_err(z, cfg);
    const auto hi_r = phif::eval_f_err(z, hi);
    CHECK(std::abs(lo_r.value - hi_r.value) <=
          lo_r.error_bound + hi_r.error_bound + 1e-300);
  }
}

TEST_CASE("order-of-growth slope on small circles", "[eval]") {
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const int cnt = 5;
  for (int n = 2; n <= 6; ++n) {
    const double r = std::pow(two_phi, n);
    double mx = 0.0;
    for (int j = 0; j < 16; ++j) {
      const double th = 2.0 * 3.14159265358979324 * j / 16.0;
      mx = std::max(
          mx, std::abs(phif::eval_f({r * std::cos(th), r * std::sin(th)}, cfg)));
    }
    const double x = n * std::log(two_phi), y = std::log(std::log(mx));
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double slope = (cnt * sxy - sx * sy) / (cnt * sxx - sx * sx);
  const double rho = std::log(2.0) / std::log(two_phi);
  CHECK(std::abs(slope - rho) < 0.1 * rho);
}

TEST_CASE("config validation and precision ceiling", "[eval]") {
  EvalConfig bad = cfg;
  bad.precision = 52;
  CHECK_THROWS_AS(phif::eval_f({0.0, 0.0}, bad), std::invalid_argument);
  bad = cfg;
  bad.tolerance = -1.0;
  CHECK_THROWS_AS(phif::eval_f({0.0, 0.0}, bad), std::invalid_argument);
  bad = cfg;
  bad.precision = 600;
  CHECK_THROWS_AS(phif::eval_f({0.0, 0.0}, bad), std::domain_error);
}
