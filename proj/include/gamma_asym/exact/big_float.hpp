#pragma once

#include <algorithm>
#include <climits>
#include <cmath>
#include <compare>
#include <cstdlib>
#include <memory>
#include <ostream>
#include <string>
#include <utility>

#include <mpfr.h>

#include "gamma_asym/errors.hpp"
#include "gamma_asym/exact/big_rational.hpp"
#include "gamma_asym/exact/quad_ext.hpp"

namespace gamma_asym {

/// Working precision (bits) used when a caller does not pass one.
inline constexpr int kDefaultPrecision = 256;

/// Binary floating-point value with per-value precision, round-to-nearest.
/// Thin RAII wrapper over an MPFR variable. Binary operations return a value
/// at the larger of the operand precisions.
class BigFloat {
 public:
  explicit BigFloat(int precision = kDefaultPrecision) {
    mpfr_init2(v_, clamp(precision));
    mpfr_set_zero(v_, 1);
  }
  BigFloat(long n, int precision) : BigFloat(precision) { mpfr_set_si(v_, n, MPFR_RNDN); }
  BigFloat(int n, int precision) : BigFloat(static_cast<long>(n), precision) {}
  BigFloat(double x, int precision) : BigFloat(precision) { mpfr_set_d(v_, x, MPFR_RNDN); }
  BigFloat(const BigRational& q, int precision) : BigFloat(precision) {
    mpfr_set_q(v_, q.get().get_mpq_t(), MPFR_RNDN);
  }
  BigFloat(const BigInt& n, int precision) : BigFloat(precision) {
    mpfr_set_z(v_, n.get_mpz_t(), MPFR_RNDN);
  }
  /// Decimal or scientific literal, e.g. "1.072042464" or "2.5e-3".
  static BigFloat parse(const std::string& text, int precision) {
    BigFloat r(precision);
    if (mpfr_set_str(r.v_, text.c_str(), 10, MPFR_RNDN) != 0) {
      throw parse_error("bad decimal literal: " + text);
    }
    return r;
  }

  BigFloat(const BigFloat& o) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  BigFloat(BigFloat&& o) noexcept {
    mpfr_init2(v_, MPFR_PREC_MIN);
    mpfr_swap(v_, o.v_);
  }
  BigFloat& operator=(const BigFloat& o) {
    if (this != &o) {
      mpfr_set_prec(v_, mpfr_get_prec(o.v_));
      mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
  }
  BigFloat& operator=(BigFloat&& o) noexcept {
    mpfr_swap(v_, o.v_);
    return *this;
  }
  ~BigFloat() { mpfr_clear(v_); }

  int precision() const { return static_cast<int>(mpfr_get_prec(v_)); }
  /// Same value rounded to another precision.
  BigFloat with_precision(int precision) const {
    BigFloat r(precision);
    mpfr_set(r.v_, v_, MPFR_RNDN);
    return r;
  }

  mpfr_srcptr get() const { return v_; }
  mpfr_ptr get() { return v_; }

  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  bool is_nan() const { return mpfr_nan_p(v_) != 0; }
  bool is_finite() const { return mpfr_number_p(v_) != 0; }
  bool is_integer() const { return mpfr_integer_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }
  /// Binary exponent e with 0.5 <= |x| / 2^e < 1; meaningless for zero.
  long exponent() const { return mpfr_get_exp(v_); }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  long to_long() const { return mpfr_get_si(v_, MPFR_RNDN); }

  static BigFloat pi(int precision) {
    BigFloat r(precision);
    mpfr_const_pi(r.v_, MPFR_RNDN);
    return r;
  }
  static BigFloat euler_gamma(int precision) {
    BigFloat r(precision);
    mpfr_const_euler(r.v_, MPFR_RNDN);
    return r;
  }
  static BigFloat two_pow(long e, int precision) {
    BigFloat r(precision);
    mpfr_set_ui_2exp(r.v_, 1, e, MPFR_RNDN);
    return r;
  }

  BigFloat operator-() const {
    BigFloat r(precision());
    mpfr_neg(r.v_, v_, MPFR_RNDN);
    return r;
  }

#define GAMMA_ASYM_BIGFLOAT_BINOP(op, fn)                                    \
  friend BigFloat operator op(const BigFloat& a, const BigFloat& b) {        \
    BigFloat r(std::max(a.precision(), b.precision()));                      \
    fn(r.v_, a.v_, b.v_, MPFR_RNDN);                                         \
    return r;                                                                \
  }                                                                          \
  friend BigFloat operator op(const BigFloat& a, long b) {                   \
    return a op BigFloat(b, a.precision());                                  \
  }                                                                          \
  friend BigFloat operator op(long a, const BigFloat& b) {                   \
    return BigFloat(a, b.precision()) op b;                                  \
  }                                                                          \
  BigFloat& operator op##=(const BigFloat& o) { return *this = *this op o; } \
  BigFloat& operator op##=(long o) { return *this = *this op o; }

  GAMMA_ASYM_BIGFLOAT_BINOP(+, mpfr_add)
  GAMMA_ASYM_BIGFLOAT_BINOP(-, mpfr_sub)
  GAMMA_ASYM_BIGFLOAT_BINOP(*, mpfr_mul)
  GAMMA_ASYM_BIGFLOAT_BINOP(/, mpfr_div)
#undef GAMMA_ASYM_BIGFLOAT_BINOP

  friend bool operator==(const BigFloat& a, const BigFloat& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }
  friend std::partial_ordering operator<=>(const BigFloat& a, const BigFloat& b) {
    if (mpfr_unordered_p(a.v_, b.v_)) return std::partial_ordering::unordered;
    int c = mpfr_cmp(a.v_, b.v_);
    return c < 0 ? std::partial_ordering::less
                 : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
  }
  friend bool operator==(const BigFloat& a, long b) { return mpfr_cmp_si(a.v_, b) == 0; }
  friend std::partial_ordering operator<=>(const BigFloat& a, long b) {
    int c = mpfr_cmp_si(a.v_, b);
    return c < 0 ? std::partial_ordering::less
                 : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
  }

  /// Fixed-point rendering with `digits` digits after the point.
  std::string to_fixed(int digits) const { return format("%.*Rf", digits); }
  /// Scientific rendering with `digits` significant digits.
  std::string to_scientific(int digits) const { return format("%.*Re", std::max(digits - 1, 0)); }
  /// Shortest-looking rendering: scientific for tiny/huge magnitudes.
  std::string to_string(int digits = 20) const {
    if (is_zero()) return "0";
    if (!is_finite()) return format("%Rg");
    long e = exponent();
    if (e > 40 || e < -12) return to_scientific(digits);
    return format("%.*Rg", digits);
  }
  friend std::ostream& operator<<(std::ostream& os, const BigFloat& x) { return os << x.to_string(); }

 private:
  static mpfr_prec_t clamp(int precision) {
    return std::max<mpfr_prec_t>(MPFR_PREC_MIN, static_cast<mpfr_prec_t>(precision));
  }
  std::string format(const char* fmt, int digits) const {
    char* buf = nullptr;
    mpfr_asprintf(&buf, fmt, digits, v_);
    std::string s(buf);
    mpfr_free_str(buf);
    return s;
  }
  std::string format(const char* fmt) const {
    char* buf = nullptr;
    mpfr_asprintf(&buf, fmt, v_);
    std::string s(buf);
    mpfr_free_str(buf);
    return s;
  }

  mpfr_t v_;
};

namespace detail {
template <int (*Fn)(mpfr_ptr, mpfr_srcptr, mpfr_rnd_t)>
BigFloat unary(const BigFloat& x) {
  BigFloat r(x.precision());
  Fn(r.get(), x.get(), MPFR_RNDN);
  return r;
}
}  // namespace detail

inline BigFloat log(const BigFloat& x) { return detail::unary<mpfr_log>(x); }
inline BigFloat log1p(const BigFloat& x) { return detail::unary<mpfr_log1p>(x); }
inline BigFloat exp(const BigFloat& x) { return detail::unary<mpfr_exp>(x); }
inline BigFloat expm1(const BigFloat& x) { return detail::unary<mpfr_expm1>(x); }
inline BigFloat sqrt(const BigFloat& x) { return detail::unary<mpfr_sqrt>(x); }
inline BigFloat sinh(const BigFloat& x) { return detail::unary<mpfr_sinh>(x); }
inline BigFloat cosh(const BigFloat& x) { return detail::unary<mpfr_cosh>(x); }
inline BigFloat tanh(const BigFloat& x) { return detail::unary<mpfr_tanh>(x); }
inline BigFloat abs(const BigFloat& x) { return detail::unary<mpfr_abs>(x); }
inline BigFloat pow(const BigFloat& x, const BigFloat& y) {
  BigFloat r(std::max(x.precision(), y.precision()));
  mpfr_pow(r.get(), x.get(), y.get(), MPFR_RNDN);
  return r;
}
inline BigFloat pow(const BigFloat& x, long n) {
  BigFloat r(x.precision());
  mpfr_pow_si(r.get(), x.get(), n, MPFR_RNDN);
  return r;
}
inline BigFloat ldexp(const BigFloat& x, long e) {
  BigFloat r(x.precision());
  mpfr_mul_2si(r.get(), x.get(), e, MPFR_RNDN);
  return r;
}
inline const BigFloat& max(const BigFloat& a, const BigFloat& b) { return a < b ? b : a; }
inline const BigFloat& min(const BigFloat& a, const BigFloat& b) { return b < a ? b : a; }

/// Nearest BigFloat to an exact rational: relative error <= 2^-precision.
inline BigFloat to_float(const BigRational& v, int precision) {
  if (precision < 53) throw domain_error("to_float: precision below 53 bits");
  return BigFloat(v, precision);
}

/// a + b*sqrt(d), recomputed with extra guard bits until cancellation between
/// the two terms cannot spoil the requested relative accuracy.
inline BigFloat to_float(const QuadExt& v, int precision) {
  if (precision < 53) throw domain_error("to_float: precision below 53 bits");
  if (v.is_rational()) return BigFloat(v.a(), precision);
  int guard = 64;
  for (int attempt = 0; attempt < 16; ++attempt) {
    int wp = precision + guard;
    BigFloat a(v.a(), wp);
    BigFloat b(v.b(), wp);
    BigFloat root = sqrt(BigFloat(v.d(), wp));
    BigFloat term = b * root;
    BigFloat sum = a + term;
    // a + b√d is never zero for irrational √d with b != 0.
    long lost = std::max(a.is_zero() ? LONG_MIN : a.exponent(), term.exponent()) - sum.exponent();
    if (lost + 8 < guard) return sum.with_precision(precision);
    guard = static_cast<int>(lost) + 64;
  }
  throw algebraic_error("to_float: cancellation did not resolve");
}

inline BigFloat to_float(const BigFloat& v, int precision) { return v.with_precision(precision); }

/// ln(2*pi)/2.
inline BigFloat half_log_two_pi(int precision) {
  return log(BigFloat::pi(precision) * 2) / 2;
}

}  // namespace gamma_asym
