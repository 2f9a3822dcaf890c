#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

#include "phif/precision.hpp"

namespace phif {

using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

// Element a + b*sqrt(5) of the real quadratic field Q(sqrt5).
//
// The golden ratio phi = (1+sqrt5)/2 lives here as (1/2, 1/2), and the
// Taylor recurrence divisors (2*phi)^n - 2*phi stay inside the field, so
// every coefficient of f is representable exactly. mpq keeps rationals in
// lowest terms with positive denominator, which makes the representation
// canonical without extra work.
class QuadNum {
 public:
  QuadNum() : a_(0), b_(0) {}
  QuadNum(int a) : a_(a), b_(0) {}
  QuadNum(Rational a) : a_(std::move(a)), b_(0) {}
  QuadNum(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {}

  static const QuadNum& phi() {
    static const QuadNum v(Rational(1, 2), Rational(1, 2));
    return v;
  }
  static const QuadNum& two_phi() {
    static const QuadNum v(Rational(1), Rational(1));
    return v;
  }
  static const QuadNum& sqrt5() {
    static const QuadNum v(Rational(0), Rational(1));
    return v;
  }

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }

  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
  bool is_rational() const { return b_.is_zero(); }

  // Field conjugate a - b*sqrt5.
  QuadNum conj() const { return QuadNum(a_, -b_); }

  // Field norm a^2 - 5 b^2 = x * conj(x); zero iff x == 0.
  Rational norm() const { return a_ * a_ - 5 * b_ * b_; }

  // Exact sign of the real value a + b*sqrt5.
  int sign() const {
    const int sa = a_.sign(), sb = b_.sign();
    if (sa == 0) return sb;
    if (sb == 0) return sa;
    if (sa == sb) return sa;
    // Opposite signs: compare a^2 with 5 b^2 through the norm.
    return sa * norm().sign();
  }

  QuadNum inv() const {
    const Rational n = norm();
    if (n.is_zero())
      throw std::domain_error("QuadNum: inverse of zero");
    return QuadNum(a_ / n, -b_ / n);
  }

  QuadNum& operator+=(const QuadNum& o) {
    a_ += o.a_;
    b_ += o.b_;
    return *this;
  }
  QuadNum& operator-=(const QuadNum& o) {
    a_ -= o.a_;
    b_ -= o.b_;
    return *this;
  }
  QuadNum& operator*=(const QuadNum& o) {
    const Rational a = a_ * o.a_ + 5 * b_ * o.b_;
    b_ = a_ * o.b_ + b_ * o.a_;
    a_ = a;
    return *this;
  }
  QuadNum& operator/=(const QuadNum& o) { return *this *= o.inv(); }

  friend QuadNum operator+(QuadNum x, const QuadNum& y) { return x += y; }
  friend QuadNum operator-(QuadNum x, const QuadNum& y) { return x -= y; }
  friend QuadNum operator*(QuadNum x, const QuadNum& y) { return x *= y; }
  friend QuadNum operator/(QuadNum x, const QuadNum& y) { return x /= y; }
  friend QuadNum operator-(const QuadNum& x) { return QuadNum(-x.a_, -x.b_); }

  friend bool operator==(const QuadNum& x, const QuadNum& y) {
    return x.a_ == y.a_ && x.b_ == y.b_;
  }
  friend bool operator!=(const QuadNum& x, const QuadNum& y) {
    return !(x == y);
  }
  friend bool operator<(const QuadNum& x, const QuadNum& y) {
    return (x - y).sign() < 0;
  }
  friend bool operator<=(const QuadNum& x, const QuadNum& y) {
    return (x - y).sign() <= 0;
  }
  friend bool operator>(const QuadNum& x, const QuadNum& y) { return y < x; }
  friend bool operator>=(const QuadNum& x, const QuadNum& y) { return y <= x; }

  QuadNum pow(unsigned n) const {
    QuadNum base = *this, acc(Rational(1));
    while (n) {
      if (n & 1u) acc *= base;
      n >>= 1u;
      if (n) base *= base;
    }
    return acc;
  }

  // Conversion to a floating tier. Evaluated at 768 bits first: a and b can
  // carry huge numerators/denominators that cancel almost completely in
  // a + b*sqrt5 (the value is tiny while a, b are O(1) with long digit
  // strings), so the wide intermediate keeps every tier correctly rounded.
  template <class R>
  R to_real() const {
    static const F768 s5 = real_sqrt_f768();
    const F768 wide = a_.convert_to<F768>() + b_.convert_to<F768>() * s5;
    return static_cast<R>(wide);
  }
  double to_double() const { return to_real<double>(); }

  // Correctly rounded to `bits` significant bits (>= 53), carried on the
  // widest tier. Rounding happens on the 768-bit intermediate, so the
  // result is within one ulp at the requested precision.
  F512 to_float(int bits) const {
    if (bits < 53)
      throw std::invalid_argument("QuadNum::to_float: precision must be >= 53");
    if (bits > 512)
      throw std::domain_error("QuadNum::to_float: precision exceeds 512 bits");
    const F768 wide = to_real<F768>();
    if (wide == 0) return F512(0);
    int e = 0;
    const F768 mant = frexp(wide, &e);
    return F512(ldexp(round(ldexp(mant, bits)), e - bits));
  }

  // "p/q + r/s*sqrt5" with the usual shortenings ("3/2", "-1/2*sqrt5").
  std::string to_string() const {
    if (b_.is_zero()) return rat_str(a_);
    std::string bs;
    const Rational babs = b_.sign() < 0 ? Rational(-b_) : b_;
    if (babs == 1)
      bs = "sqrt5";
    else
      bs = rat_str(babs) + "*sqrt5";
    if (a_.is_zero()) return (b_.sign() < 0 ? "-" : "") + bs;
    return rat_str(a_) + (b_.sign() < 0 ? " - " : " + ") + bs;
  }

  static QuadNum parse(std::string_view text);

 private:
  static std::string rat_str(const Rational& r) {
    return r.str();
  }
  static F768 real_sqrt_f768() {
    using std::sqrt;
    return sqrt(F768(5));
  }

  Rational a_;
  Rational b_;
};

namespace detail {

inline std::string strip_spaces(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s)
    if (c != ' ' && c != '\t') out.push_back(c);
  return out;
}

inline Rational parse_rational(const std::string& s) {
  if (s.empty() || s == "+") return Rational(1);
  if (s == "-") return Rational(-1);
  if (s[0] == '+') return parse_rational(s.substr(1));
  const auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rational(Integer(s));
    Rational num(Integer(s.substr(0, slash)));
    const Integer den(s.substr(slash + 1));
    if (den.is_zero())
      throw std::invalid_argument("QuadNum: zero denominator");
    return num / Rational(den);
  } catch (const std::runtime_error&) {
    throw std::invalid_argument("QuadNum: malformed rational '" + s + "'");
  }
}

}  // namespace detail

inline QuadNum QuadNum::parse(std::string_view text) {
  const std::string s = detail::strip_spaces(text);
  if (s.empty()) throw std::invalid_argument("QuadNum: empty string");
  // Split at the last top-level +/- (signs at position 0 belong to the
  // first term; "p/q" has no exponent notation to worry about).
  std::size_t split = std::string::npos;
  for (std::size_t i = 1; i < s.size(); ++i)
    if (s[i] == '+' || s[i] == '-') split = i;
  auto term = [](const std::string& t, Rational& a, Rational& b) {
    const auto pos = t.find("sqrt5");
    if (pos == std::string::npos) {
      a += detail::parse_rational(t);
      return;
    }
    if (pos + 5 != t.size())
      throw std::invalid_argument("QuadNum: trailing junk after sqrt5");
    std::string coef = t.substr(0, pos);
    if (!coef.empty() && coef.back() == '*') coef.pop_back();
    b += detail::parse_rational(coef);
  };
  Rational a(0), b(0);
  if (split == std::string::npos) {
    term(s, a, b);
  } else {
    term(s.substr(0, split), a, b);
    std::string rhs = s.substr(split);  // keeps the sign
    // "+x" or "-x": fold the sign into the term.
    if (rhs.size() < 2)
      throw std::invalid_argument("QuadNum: dangling sign");
    if (rhs[0] == '+') rhs.erase(0, 1);
    term(rhs, a, b);
  }
  return QuadNum(a, b);
}

}  // namespace phif
