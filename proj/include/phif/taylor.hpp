#pragma once

#include <memory>
#include <mutex>
#include <stdexcept>
#include <vector>

#include "phif/quadfield.hpp"

namespace phif {

// Taylor coefficients of f at 0: coeffs[n] = f^(n)(0) / n!, exact in Q(sqrt5).
//
// Matching powers of z in f(2*phi*z) = f(z)^2 - 1 gives, with c_0 = phi and
// c_1 = 1,
//
//     c_n = ( sum_{k=1}^{n-1} c_k c_{n-k} ) / ( (2 phi)^n - 2 phi ),  n >= 2,
//
// the coefficient form of the derivative recurrence obtained from the
// Leibniz rule. The divisor is an exact field element, so no rounding ever
// enters the table.
struct TaylorTable {
  std::vector<QuadNum> coeffs;
  int cutoff = 0;  // == coeffs.size() - 1
};

namespace detail {

struct TaylorState {
  std::vector<QuadNum> c;
  QuadNum w_pow;  // (2 phi)^n for n == c.size()
};

inline std::mutex& taylor_mutex() {
  static std::mutex m;
  return m;
}

inline TaylorState& taylor_state() {
  static TaylorState s;
  return s;
}

// Extends the master table to index N. Caller holds taylor_mutex().
inline void taylor_extend(int N) {
  auto& st = taylor_state();
  const QuadNum& w = QuadNum::two_phi();
  if (st.c.empty()) {
    st.c.push_back(QuadNum::phi());
    st.c.push_back(QuadNum(1));
    st.w_pow = w * w;
  }
  while ((int)st.c.size() <= N) {
    const int n = (int)st.c.size();
    QuadNum s;
    for (int k = 1; 2 * k < n; ++k) s += st.c[k] * st.c[n - k];
    s += s;
    if (n % 2 == 0) s += st.c[n / 2] * st.c[n / 2];
    st.c.push_back(s / (st.w_pow - w));
    st.w_pow *= w;
  }
}

}  // namespace detail

inline TaylorTable taylor_coeffs(int N) {
  if (N < 0) throw std::invalid_argument("taylor_coeffs: negative cutoff");
  std::lock_guard<std::mutex> lock(detail::taylor_mutex());
  detail::taylor_extend(N);
  const auto& c = detail::taylor_state().c;
  return TaylorTable{std::vector<QuadNum>(c.begin(), c.begin() + N + 1), N};
}

// Floating view of the table on tier R, memoized per tier. Snapshots are
// immutable; growth replaces the shared vector, so concurrent readers keep
// whatever they already hold.
template <class R>
std::shared_ptr<const std::vector<R>> taylor_coeffs_real(int N) {
  static std::mutex m;
  static std::shared_ptr<const std::vector<R>> snap;
  std::lock_guard<std::mutex> lock(m);
  if (!snap || (int)snap->size() <= N) {
    const TaylorTable t = taylor_coeffs(N);
    auto grown = std::make_shared<std::vector<R>>();
    grown->reserve(N + 1);
    for (const auto& q : t.coeffs) grown->push_back(q.template to_real<R>());
    snap = std::move(grown);
  }
  return snap;
}

}  // namespace phif
