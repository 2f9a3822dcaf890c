#pragma once

#include <stdexcept>

namespace phif {

// Knobs shared by every numeric operation. The defaults cover all built-in
// verification suites; precision is the number of *requested* mantissa bits
// and is raised internally when argument reduction needs headroom.
struct EvalConfig {
  int series_cutoff = 64;   // Taylor cutoff N
  int product_depth = 60;   // truncation depth D for infinite products
  int precision = 53;       // requested mantissa bits (>= 53)
  double tolerance = 1e-10; // acceptance tolerance for residual checks

  void validate() const {
    if (series_cutoff <= 0 || product_depth <= 0 || tolerance <= 0)
      throw std::invalid_argument("EvalConfig: all fields must be positive");
    if (precision < 53)
      throw std::invalid_argument("EvalConfig: precision must be >= 53 bits");
  }
};

// Working precision for an evaluation that applies k squaring steps of the
// functional equation: each step about doubles the absolute error, so 2k
// extra bits plus guard bits keep the requested precision intact.
inline int working_bits(const EvalConfig& cfg, int scaling_steps) {
  return cfg.precision + 2 * scaling_steps + 16;
}

}  // namespace phif
