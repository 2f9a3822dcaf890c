// Walks f along the real axis across its first zero at -2C and prints the
// inverse pair g(f(x)) alongside, with error bounds.

#include <cstdio>

#include "phif/phif.hpp"

int main() {
  const phif::EvalConfig cfg{};
  const double C = phif::paris_constant(cfg);
  std::printf("Paris constant C = %.15f (first zero of f at -2C = %.15f)\n\n",
              C, -2.0 * C);
  std::printf("%10s %22s %14s %22s\n", "x", "f(x)", "bound", "g(f(x))");
  for (double x = -2.5; x <= 1.01; x += 0.25) {
    const auto f = phif::eval_f_err({x, 0.0}, cfg);
    double ginv = 0.0;
    bool have_g = true;
    try {
      ginv = phif::eval_g(f.value, cfg).real();
    } catch (const std::domain_error&) {
      have_g = false;
    }
    if (have_g)
      std::printf("%10.4f %22.15f %14.2e %22.15f\n", x, f.value.real(),
                  f.error_bound, ginv);
    else
      std::printf("%10.4f %22.15f %14.2e %22s\n", x, f.value.real(),
                  f.error_bound, "(outside g's domain)");
  }
  return 0;
}
