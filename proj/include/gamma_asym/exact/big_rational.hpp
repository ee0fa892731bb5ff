#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>

#include <gmpxx.h>

#include "gamma_asym/errors.hpp"

namespace gamma_asym {

using BigInt = mpz_class;

/// Exact rational number, always kept in lowest terms with a positive
/// denominator. Backed by GMP.
class BigRational {
 public:
  BigRational() = default;
  BigRational(int n) : v_(n) {}  // NOLINT(google-explicit-constructor)
  BigRational(long n) : v_(n) {}  // NOLINT(google-explicit-constructor)
  BigRational(long long n) : v_(BigInt(std::to_string(n))) {}  // NOLINT
  BigRational(const BigInt& n) : v_(n) {}  // NOLINT(google-explicit-constructor)
  BigRational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw domain_error("BigRational: zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
  }
  BigRational(long num, long den) : BigRational(BigInt(num), BigInt(den)) {}
  explicit BigRational(const mpq_class& q) : v_(q) { v_.canonicalize(); }

  /// Parses "n", "n/d" or a finite decimal such as "-0.125" (exactly).
  static BigRational parse(std::string_view text) {
    std::string s(text);
    while (!s.empty() && (s.front() == ' ' || s.front() == '+')) s.erase(s.begin());
    while (!s.empty() && s.back() == ' ') s.pop_back();
    if (s.empty()) throw parse_error("empty rational literal");
    try {
      if (auto slash = s.find('/'); slash != std::string::npos) {
        return BigRational(BigInt(s.substr(0, slash), 10), BigInt(s.substr(slash + 1), 10));
      }
      if (auto dot = s.find('.'); dot != std::string::npos) {
        std::string digits = s.substr(0, dot) + s.substr(dot + 1);
        std::size_t frac = s.size() - dot - 1;
        BigInt den;
        mpz_ui_pow_ui(den.get_mpz_t(), 10, frac);
        if (digits == "-" || digits.empty()) throw parse_error("bad decimal");
        return BigRational(BigInt(digits, 10), den);
      }
      return BigRational(BigInt(s, 10));
    } catch (const std::invalid_argument&) {
      throw parse_error("bad rational literal: " + std::string(text));
    }
  }

  BigInt numerator() const { return v_.get_num(); }
  BigInt denominator() const { return v_.get_den(); }
  const mpq_class& get() const { return v_; }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  BigRational operator-() const { return BigRational(mpq_class(-v_)); }
  BigRational& operator+=(const BigRational& o) { v_ += o.v_; return *this; }
  BigRational& operator-=(const BigRational& o) { v_ -= o.v_; return *this; }
  BigRational& operator*=(const BigRational& o) { v_ *= o.v_; return *this; }
  BigRational& operator/=(const BigRational& o) {
    if (o.is_zero()) throw domain_error("BigRational: division by zero");
    v_ /= o.v_;
    return *this;
  }
  friend BigRational operator+(BigRational a, const BigRational& b) { return a += b; }
  friend BigRational operator-(BigRational a, const BigRational& b) { return a -= b; }
  friend BigRational operator*(BigRational a, const BigRational& b) { return a *= b; }
  friend BigRational operator/(BigRational a, const BigRational& b) { return a /= b; }

  friend bool operator==(const BigRational& a, const BigRational& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const BigRational& a, const BigRational& b) {
    int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  BigRational inverse() const {
    if (is_zero()) throw domain_error("BigRational: inverse of zero");
    return BigRational(mpq_class(1 / v_));
  }
  BigRational abs() const { return sign() < 0 ? -*this : *this; }

  BigRational pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    BigInt n, d;
    mpz_pow_ui(n.get_mpz_t(), v_.get_num_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(d.get_mpz_t(), v_.get_den_mpz_t(), static_cast<unsigned long>(e));
    return BigRational(n, d);
  }

  /// "n" for integers, "n/d" otherwise.
  std::string to_string() const { return v_.get_str(10); }

  friend std::ostream& operator<<(std::ostream& os, const BigRational& r) {
    return os << r.to_string();
  }

 private:
  mpq_class v_;
};

inline BigRational ring_inverse(const BigRational& r) { return r.inverse(); }

inline BigInt factorial(unsigned long n) {
  BigInt f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return f;
}

inline BigInt binomial(unsigned long n, unsigned long k) {
  BigInt b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return b;
}

}  // namespace gamma_asym
