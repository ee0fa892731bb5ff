#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "gamma_asym/errors.hpp"
#include "gamma_asym/exact/big_rational.hpp"

namespace gamma_asym {

/// Result of writing a positive integer as square * square-free.
struct SquareFreeParts {
  BigInt square_root;  // s with n = s^2 * f
  BigInt free_part;    // f, square-free
};

/// Trial division by all primes up to 10^6. A leftover cofactor c with no
/// small prime factor is either prime, a product of two distinct large primes
/// or a prime square when c < 10^18; beyond that the decomposition is refused.
inline SquareFreeParts square_free_decompose(const BigInt& n) {
  if (n <= 0) throw domain_error("square_free_decompose: argument must be positive");
  constexpr unsigned long kTrialLimit = 1'000'000;
  BigInt rest = n;
  BigInt root = 1;
  BigInt free = 1;
  auto strip = [&](unsigned long p) {
    unsigned long e = 0;
    while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
      mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
      ++e;
    }
    for (unsigned long i = 0; i < e / 2; ++i) root *= p;
    if (e % 2 == 1) free *= p;
  };
  strip(2);
  for (unsigned long p = 3; p <= kTrialLimit && rest > 1; p += 2) {
    if (BigInt(p) * p > rest) break;
    strip(p);
  }
  if (rest > 1) {
    if (mpz_perfect_square_p(rest.get_mpz_t())) {
      BigInt r;
      mpz_sqrt(r.get_mpz_t(), rest.get_mpz_t());
      root *= r;
    } else {
      BigInt limit;
      mpz_ui_pow_ui(limit.get_mpz_t(), 10, 18);
      if (rest >= limit && BigInt(kTrialLimit) * kTrialLimit < rest) {
        throw algebraic_error("square-free part extraction failed: cofactor " +
                              rest.get_str() + " has no factor below 10^6");
      }
      free *= rest;
    }
  }
  return {root, free};
}

/// Element a + b*sqrt(d) of the quadratic field Q(sqrt d). Rationals are the
/// elements with b = 0, stored with d = 0, and mix freely with any field.
class QuadExt {
 public:
  QuadExt() = default;
  QuadExt(int n) : a_(n) {}  // NOLINT(google-explicit-constructor)
  QuadExt(long n) : a_(n) {}  // NOLINT(google-explicit-constructor)
  QuadExt(const BigRational& a) : a_(a) {}  // NOLINT(google-explicit-constructor)
  QuadExt(BigRational a, BigRational b, BigInt d) : a_(std::move(a)), b_(std::move(b)), d_(std::move(d)) {
    if (d_ < 0) throw domain_error("QuadExt: negative radicand");
    normalize();
  }

  const BigRational& a() const { return a_; }
  const BigRational& b() const { return b_; }
  const BigInt& d() const { return d_; }

  bool is_rational() const { return b_.is_zero(); }
  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }

  BigRational rational_value() const {
    if (!is_rational()) throw algebraic_error("QuadExt: value is irrational");
    return a_;
  }

  QuadExt conjugate() const { return QuadExt(a_, -b_, d_, Reduced{}); }
  /// a^2 - d b^2, always rational.
  BigRational norm() const { return a_ * a_ - BigRational(d_) * b_ * b_; }

  QuadExt operator-() const { return QuadExt(-a_, -b_, d_, Reduced{}); }
  friend QuadExt operator+(const QuadExt& x, const QuadExt& y) {
    BigInt d = common_field(x, y);
    return QuadExt(x.a_ + y.a_, x.b_ + y.b_, d, Reduced{});
  }
  friend QuadExt operator-(const QuadExt& x, const QuadExt& y) {
    BigInt d = common_field(x, y);
    return QuadExt(x.a_ - y.a_, x.b_ - y.b_, d, Reduced{});
  }
  friend QuadExt operator*(const QuadExt& x, const QuadExt& y) {
    if (x.is_rational()) return y * x.a_;
    if (y.is_rational()) return x * y.a_;
    BigInt d = common_field(x, y);
    return QuadExt(x.a_ * y.a_ + BigRational(d) * x.b_ * y.b_, x.a_ * y.b_ + x.b_ * y.a_, d, Reduced{});
  }
  friend QuadExt operator*(const QuadExt& x, const BigRational& q) {
    if (x.is_rational()) return QuadExt(x.a_ * q);
    return QuadExt(x.a_ * q, x.b_ * q, x.d_, Reduced{});
  }
  friend QuadExt operator/(const QuadExt& x, const QuadExt& y) { return x * y.inverse(); }
  QuadExt& operator+=(const QuadExt& o) { return *this = *this + o; }
  QuadExt& operator-=(const QuadExt& o) { return *this = *this - o; }
  QuadExt& operator*=(const QuadExt& o) { return *this = *this * o; }

  QuadExt inverse() const {
    if (is_zero()) throw domain_error("QuadExt: inverse of zero");
    if (is_rational()) return QuadExt(a_.inverse());
    BigRational n = norm();
    return QuadExt(a_ / n, -b_ / n, d_, Reduced{});
  }

  friend bool operator==(const QuadExt& x, const QuadExt& y) {
    return x.a_ == y.a_ && x.b_ == y.b_ && x.d_ == y.d_;
  }

  /// "p/q", "(b)√d" or "(a + b√d)".
  std::string to_string() const {
    if (is_rational()) return a_.to_string();
    std::string surd = "√" + d_.get_str();
    if (a_.is_zero()) return "(" + b_.to_string() + ")" + surd;
    std::string sign = b_.sign() < 0 ? " - " : " + ";
    return "(" + a_.to_string() + sign + b_.abs().to_string() + surd + ")";
  }
  friend std::ostream& operator<<(std::ostream& os, const QuadExt& q) { return os << q.to_string(); }

 private:
  struct Reduced {};
  // d is already square-free (or zero); only the rational collapse is needed.
  QuadExt(BigRational a, BigRational b, const BigInt& d, Reduced) : a_(std::move(a)), b_(std::move(b)), d_(d) {
    if (b_.is_zero()) d_ = 0;
    if (d_ == 0) b_ = BigRational(0);
  }

  static BigInt common_field(const QuadExt& x, const QuadExt& y) {
    if (x.is_rational()) return y.d_;
    if (y.is_rational()) return x.d_;
    if (x.d_ != y.d_) {
      throw algebraic_error("QuadExt: values from different quadratic fields (√" + x.d_.get_str() +
                            " and √" + y.d_.get_str() + ")");
    }
    return x.d_;
  }

  void normalize() {
    if (b_.is_zero() || d_ == 0) {
      b_ = BigRational(0);
      d_ = 0;
      return;
    }
    SquareFreeParts parts = square_free_decompose(d_);
    b_ *= BigRational(parts.square_root);
    d_ = parts.free_part;
    if (d_ == 1) {
      a_ += b_;
      b_ = BigRational(0);
      d_ = 0;
    }
  }

  BigRational a_;
  BigRational b_;
  BigInt d_ = 0;
};

inline QuadExt ring_inverse(const QuadExt& q) { return q.inverse(); }

/// Exact square root of a nonnegative rational, as an element of Q(sqrt f).
inline QuadExt sqrt_exact(const BigRational& r) {
  if (r.sign() < 0) throw algebraic_error("sqrt_exact: negative argument has no real square root");
  if (r.is_zero()) return QuadExt(0);
  BigInt nd = r.numerator() * r.denominator();
  SquareFreeParts parts = square_free_decompose(nd);
  return QuadExt(0, BigRational(parts.square_root, r.denominator()), parts.free_part);
}

/// Square root inside the field of `v` (or a new quadratic field when v is
/// rational). Nested radicals that do not denest are rejected.
inline QuadExt sqrt_exact(const QuadExt& v) {
  if (v.is_rational()) return sqrt_exact(v.a());
  // (u + w√d)^2 = alpha + beta√d  =>  u^2 + d w^2 = alpha, 2uw = beta.
  const BigRational& alpha = v.a();
  const BigRational& beta = v.b();
  QuadExt disc = sqrt_exact(v.norm());
  if (!disc.is_rational()) {
    throw algebraic_error("sqrt_exact: " + v.to_string() + " is not a square in Q(√" + v.d().get_str() + ")");
  }
  for (int s : {1, -1}) {
    BigRational u2 = (alpha + BigRational(s) * disc.a()) / BigRational(2);
    if (u2.sign() <= 0) continue;
    QuadExt u = sqrt_exact(u2);
    if (!u.is_rational()) continue;
    BigRational w = beta / (BigRational(2) * u.a());
    return QuadExt(u.a(), w, v.d());
  }
  throw algebraic_error("sqrt_exact: " + v.to_string() + " is not a square in Q(√" + v.d().get_str() + ")");
}

/// Both roots of A y^2 + B y + C = 0, "+sqrt" branch first. A double root is
/// reported twice.
inline std::vector<QuadExt> quad_roots(const QuadExt& A, const QuadExt& B, const QuadExt& C) {
  if (A.is_zero()) throw domain_error("quad_roots: leading coefficient is zero");
  QuadExt disc = B * B - QuadExt(4) * A * C;
  QuadExt root = sqrt_exact(disc);
  QuadExt two_a = A * BigRational(2);
  return {(-B + root) / two_a, (-B - root) / two_a};
}

}  // namespace gamma_asym
