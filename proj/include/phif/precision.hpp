#pragma once

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <limits>
#include <stdexcept>

namespace phif {

namespace mp = boost::multiprecision;

// Binary floating-point tiers used as working precisions. Evaluations pick
// the smallest tier that covers the requested precision plus the headroom
// needed by argument-reduction (each squaring step in the functional
// equation roughly doubles the accumulated error).
using F113 = mp::number<mp::cpp_bin_float<113, mp::digit_base_2>, mp::et_off>;
using F256 = mp::number<mp::cpp_bin_float<256, mp::digit_base_2>, mp::et_off>;
using F512 = mp::number<mp::cpp_bin_float<512, mp::digit_base_2>, mp::et_off>;

// Only for exact-rational -> float conversion: wide enough that the
// cancellation in a + b*sqrt5 never shows at any public tier.
using F768 = mp::number<mp::cpp_bin_float<768, mp::digit_base_2>, mp::et_off>;

template <class R>
inline R real_eps() {
  return std::numeric_limits<R>::epsilon();
}

inline double to_double(double x) { return x; }
template <class R>
double to_double(const R& x) {
  return x.template convert_to<double>();
}

// Calls fn with a value-initialized dummy of the selected tier type.
// All branches must yield the same result type.
template <class Fn>
auto with_real_tier(int bits, Fn&& fn) {
  if (bits <= 53) return fn(double{});
  if (bits <= 113) return fn(F113{});
  if (bits <= 256) return fn(F256{});
  if (bits <= 512) return fn(F512{});
  throw std::domain_error(
      "phif: requested working precision exceeds the 512-bit tier");
}

}  // namespace phif
