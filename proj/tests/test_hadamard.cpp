#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>
#include <random>

#include "phif/hadamard.hpp"

using phif::Approx;
using phif::ClosedVariant;
using phif::EvalConfig;
using phif::HProduct;
using std::complex;

namespace {
constexpr double two_phi = 3.23606797749978969;
constexpr double phi_d = 1.61803398874989485;
const EvalConfig cfg{};

const HProduct& shared_h() {
  static const HProduct h = HProduct::build(10, cfg);
  return h;
}
}  // namespace

TEST_CASE("HProduct invariants", "[hadamard]") {
  const HProduct& h = shared_h();
  REQUIRE(h.zeros.size() == 1024);
  // Contains the real zero.
  bool has_real = false;
  for (const auto& r : h.zeros)
    if (std::abs(r.value - complex<double>{-2.19728392878831, 0.0}) < 1e-9)
      has_real = true;
  CHECK(has_real);
  // Closed under conjugation away from the top shells (conjugation can move
  // the last -1 of the address by up to two positions).
  for (const auto& r : h.zeros) {
    if ((int)r.seq.word.size() > h.truncation_L - 2) continue;
    bool found = false;
    for (const auto& s : h.zeros)
      if (std::abs(s.value - std::conj(r.value)) <
          1e-9 * std::max(1.0, std::abs(r.value))) {
        found = true;
        break;
      }
    CHECK(found);
  }
}

TEST_CASE("h_eval anchors", "[hadamard]") {
  const HProduct& h = shared_h();
  const auto at0 = phif::h_eval(h, {0.0, 0.0});
  CHECK(at0.value == complex<double>{1.0, 0.0});

  for (int i : {0, 5, 100})
    CHECK(std::abs(phif::h_eval(h, h.zeros[i].value).value) < 1e-10);

  // H(1) = phi (f(1/(2 phi)) - 1), with eval_f as the oracle.
  const auto hv = phif::h_eval(h, {1.0, 0.0});
  const double oracle =
      phi_d * (phif::eval_f({1.0 / two_phi, 0.0}, cfg).real() - 1.0);
  CHECK(std::abs(hv.value.real() - oracle) <= hv.error_bound);
  CHECK(std::abs(hv.value.real() - oracle) < 1e-3);  // calibrated at L = 10
}

TEST_CASE("f via the simple-zero product", "[hadamard]") {
  const HProduct& h = shared_h();
  const auto at0 = phif::f_via_h(h, {0.0, 0.0});
  CHECK(at0.value.real() == Catch::Approx(phi_d).margin(1e-14));

  // At z = -2C/(2 phi): H(2 phi z) = H(-2C) = 0, so the value is exactly 1,
  // and f itself takes the value +1 there (positive branch of f^2 = 1).
  const double C = phif::paris_constant(cfg);
  const double zc = -2.0 * C / two_phi;
  const auto at_pre = phif::f_via_h(h, {zc, 0.0});
  CHECK(std::abs(at_pre.value - complex<double>{1.0, 0.0}) < 1e-9);
  CHECK(std::abs(phif::eval_f({zc, 0.0}, cfg) - complex<double>{1.0, 0.0}) <
        1e-10);

  std::mt19937 rng(31);
  std::uniform_real_distribution<double> u(-0.5, 0.5);
  for (int i = 0; i < 20; ++i) {
    complex<double> z{u(rng), u(rng)};
    if (std::abs(z) > 0.5) continue;
    const auto a = phif::f_via_h(h, z);
    CHECK(std::abs(a.value - phif::eval_f(z, cfg)) <= a.error_bound + 1e-13);
  }
}

TEST_CASE("f via the square-root form", "[hadamard]") {
  const HProduct& h = shared_h();
  const auto at0 = phif::f_via_sqrt(h, {0.0, 0.0});
  // 2 + 1/phi = phi^2 exactly.
  CHECK(at0.value.real() == Catch::Approx(phi_d).margin(1e-14));
  CHECK_FALSE(at0.branch_ambiguous);

  const auto a = phif::f_via_sqrt(h, {0.3, 0.0});
  CHECK(std::abs(a.value - phif::eval_f({0.3, 0.0}, cfg)) <=
        a.error_bound + 1e-13);
  CHECK_FALSE(a.branch_ambiguous);
}

TEST_CASE("Weierstrass-Hadamard outer product", "[hadamard]") {
  const HProduct& h = shared_h();
  CHECK(phif::f_via_wh(h, {0.0, 0.0}, 8).value.real() ==
        Catch::Approx(phi_d).margin(1e-14));

  // The n = 0 factor vanishes at the real zero.
  const double C = phif::paris_constant(cfg);
  CHECK(std::abs(phif::f_via_wh(h, {-2.0 * C, 0.0}, 8).value) < 1e-8);

  const auto a = phif::f_via_wh(h, {0.5, 0.0}, 8);
  const double diff = std::abs(a.value - phif::eval_f({0.5, 0.0}, cfg));
  CHECK(diff <= a.error_bound + 1e-13);
  CHECK(diff < 1e-3);  // calibrated against the L = 10 zero list
  CHECK_THROWS_AS(phif::f_via_wh(h, {0.1, 0.0}, 0), std::invalid_argument);
}

TEST_CASE("derivative from H products", "[hadamard]") {
  const HProduct& h = shared_h();
  CHECK(phif::f_prime_via_h(h, {0.0, 0.0}, 8).value.real() ==
        Catch::Approx(1.0).margin(1e-14));

  const auto a = phif::f_prime_via_h(h, {0.2, 0.0}, 8);
  CHECK(std::abs(a.value - phif::eval_f_prime({0.2, 0.0}, cfg)) < 1e-4);
  CHECK(std::abs(a.value - phif::eval_f_prime({0.2, 0.0}, cfg)) <=
        a.error_bound + 1e-13);

  // Finite difference of eval_f at the real zero.
  const double C = phif::paris_constant(cfg);
  const double hstep = 1e-6;
  const auto fd = (phif::eval_f({-2.0 * C + hstep, 0.0}, cfg) -
                   phif::eval_f({-2.0 * C - hstep, 0.0}, cfg)) /
                  (2.0 * hstep);
  const auto ad = phif::f_prime_via_h(h, {-2.0 * C, 0.0}, 8);
  CHECK(std::abs(ad.value - fd) <= ad.error_bound + 1e-7);
}

TEST_CASE("closed forms at the origin", "[hadamard]") {
  for (auto v : {ClosedVariant::theorem1, ClosedVariant::remark}) {
    const auto a = phif::closed_form_eval({0.0, 0.0}, 8, v);
    CHECK(a.value.real() == Catch::Approx(phi_d).margin(1e-13));
    CHECK(a.value.imag() == 0.0);
  }
}

TEST_CASE("closed forms match eval_f", "[hadamard]") {
  for (auto v : {ClosedVariant::theorem1, ClosedVariant::remark}) {
    const auto a = phif::closed_form_eval({0.2, 0.0}, 12, v);
    const auto ref = phif::eval_f({0.2, 0.0}, cfg);
    CHECK(std::abs(a.value - ref) <= a.error_bound + 1e-13);
    CHECK(std::abs(a.value - ref) < 1e-3);  // calibrated at L = 12
  }
}

TEST_CASE("theorem1 form vanishes at the real zero as L grows", "[hadamard]") {
  const double C = phif::paris_constant(cfg);
  const complex<double> z{-2.0 * C, 0.0};
  const double v6 = std::abs(phif::closed_form_eval(z, 6, ClosedVariant::theorem1).value);
  const double v12 =
      std::abs(phif::closed_form_eval(z, 12, ClosedVariant::theorem1).value);
  CHECK(v12 < v6);
  CHECK(v12 < 5e-3);
}

TEST_CASE("weights of theorem1 equal -2/z0", "[hadamard]") {
  // The inner product over one sigma is algebraically -2/z0(sigma).
  const auto z = phif::z0_value(phif::SignSeq::parse_sigma("+-"));
  const auto cf = phif::detail::closed_form_cached(ClosedVariant::theorem1, 4);
  bool matched = false;
  for (const auto& w : cf->weights)
    if (std::abs(w - (-2.0 / z)) < 1e-12) matched = true;
  CHECK(matched);
}

TEST_CASE("moment partial sums", "[hadamard]") {
  const auto s2 = phif::moment_partial_sums(16, ClosedVariant::theorem1);
  const auto s1 = phif::moment_partial_sums(16, ClosedVariant::remark);

  // L = 0 term is 1/C.
  const double C = phif::paris_constant(cfg);
  CHECK(std::abs(s2[0] - 1.0 / C) < 1e-10);

  // Calibrated regression bounds at L = 16.
  CHECK(std::abs(s2[16] - 1.0) < 6e-5);
  CHECK(std::abs(s1[16] - 1.0) < 1.6e-4);

  // Partial sums are Cauchy with geometric increments.
  for (int m = 8; m < 16; ++m) {
    const double d1 = std::abs(s2[m] - s2[m - 1]);
    const double d2 = std::abs(s2[m + 1] - s2[m]);
    CHECK(d2 < 0.75 * d1);
  }
  CHECK(phif::moment_sum(16, ClosedVariant::theorem1) == s2[16]);
}

TEST_CASE("f_via_h respects the functional equation", "[hadamard]") {
  const HProduct& h = shared_h();
  for (double x : {-0.8, -0.3, 0.2, 0.6, 1.0}) {
    const complex<double> z{x, 0.1};
    const auto a = phif::f_via_h(h, z);
    const auto b = phif::f_via_h(h, z * two_phi);
    const double combined =
        2.0 * std::abs(a.value) * a.error_bound + a.error_bound * a.error_bound +
        b.error_bound + 1e-12;
    CHECK(std::abs(a.value * a.value - 1.0 - b.value) <= combined);
  }
}

TEST_CASE("argument-principle smoke: winding counts the stored zeros",
          "[hadamard]") {
  const HProduct& h = shared_h();
  const double r = std::pow(two_phi, 2) * 1.03;
  int inside = 0;
  for (const auto& rec : h.zeros)
    if (std::abs(rec.value) < r) ++inside;

  double winding = 0.0;
  std::complex<double> prev = phif::h_eval(h, {r, 0.0}).value;
  const int samples = 4096;
  for (int j = 1; j <= samples; ++j) {
    const double th = 2.0 * 3.14159265358979324 * j / samples;
    const std::complex<double> cur =
        phif::h_eval(h, {r * std::cos(th), r * std::sin(th)}).value;
    winding += std::arg(cur / prev);
    prev = cur;
  }
  CHECK((int)std::lround(winding / (2.0 * 3.14159265358979324)) == inside);
}
