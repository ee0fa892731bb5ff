#pragma once

#include <algorithm>
#include <cstddef>
#include <utility>
#include <vector>

#include "gamma_asym/errors.hpp"
#include "gamma_asym/exact/big_float.hpp"

namespace gamma_asym {

/// Truncated Taylor expansion f(x0 + h) = Σ c_k h^k, k <= degree. Arithmetic
/// propagates exact derivatives (c_k = f^(k)(x0)/k!) without differencing.
class Jet {
 public:
  Jet() = default;
  Jet(std::vector<BigFloat> c) : c_(std::move(c)) {}  // NOLINT(google-explicit-constructor)

  static Jet constant(const BigFloat& v, int degree) {
    std::vector<BigFloat> c(static_cast<std::size_t>(degree + 1), BigFloat(v.precision()));
    c[0] = v;
    return Jet(std::move(c));
  }
  /// The independent variable at x0.
  static Jet variable(const BigFloat& x0, int degree) {
    Jet j = constant(x0, degree);
    if (degree >= 1) j.c_[1] = BigFloat(1L, x0.precision());
    return j;
  }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  int precision() const { return c_.front().precision(); }
  const BigFloat& value() const { return c_.front(); }
  const BigFloat& coeff(int k) const { return c_[static_cast<std::size_t>(k)]; }
  /// k-th derivative at x0.
  BigFloat derivative(int k) const {
    return c_[static_cast<std::size_t>(k)] * BigFloat(factorial(static_cast<unsigned long>(k)), precision());
  }

  Jet lift(const BigFloat& v) const { return constant(v, degree()); }

  Jet operator-() const {
    Jet r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
  }
  friend Jet operator+(Jet a, const Jet& b) {
    for (std::size_t i = 0; i < a.c_.size(); ++i) a.c_[i] += b.c_[i];
    return a;
  }
  friend Jet operator-(Jet a, const Jet& b) {
    for (std::size_t i = 0; i < a.c_.size(); ++i) a.c_[i] -= b.c_[i];
    return a;
  }
  friend Jet operator*(const Jet& a, const Jet& b) {
    std::size_t n = a.c_.size();
    std::vector<BigFloat> r(n, BigFloat(std::max(a.precision(), b.precision())));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; i + j < n; ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return Jet(std::move(r));
  }
  friend Jet operator/(const Jet& a, const Jet& b) {
    if (b.value().is_zero()) throw domain_error("Jet: division by a jet with zero value");
    std::size_t n = a.c_.size();
    std::vector<BigFloat> q(n, BigFloat(std::max(a.precision(), b.precision())));
    for (std::size_t k = 0; k < n; ++k) {
      BigFloat acc = a.c_[k];
      for (std::size_t j = 1; j <= k; ++j) acc -= b.c_[j] * q[k - j];
      q[k] = acc / b.c_[0];
    }
    return Jet(std::move(q));
  }

  friend Jet operator+(Jet a, const BigFloat& s) { a.c_[0] += s; return a; }
  friend Jet operator+(const BigFloat& s, Jet a) { a.c_[0] += s; return a; }
  friend Jet operator-(Jet a, const BigFloat& s) { a.c_[0] -= s; return a; }
  friend Jet operator-(const BigFloat& s, const Jet& a) { return -(a - s); }
  friend Jet operator*(Jet a, const BigFloat& s) {
    for (auto& c : a.c_) c *= s;
    return a;
  }
  friend Jet operator*(const BigFloat& s, Jet a) { return std::move(a) * s; }
  friend Jet operator/(Jet a, const BigFloat& s) {
    for (auto& c : a.c_) c /= s;
    return a;
  }
  friend Jet operator/(const BigFloat& s, const Jet& a) { return a.lift(s) / a; }
  friend Jet operator+(Jet a, long s) { a.c_[0] += s; return a; }
  friend Jet operator-(Jet a, long s) { a.c_[0] -= s; return a; }
  friend Jet operator*(Jet a, long s) {
    for (auto& c : a.c_) c *= s;
    return a;
  }
  friend Jet operator/(Jet a, long s) {
    for (auto& c : a.c_) c /= s;
    return a;
  }

  Jet& operator+=(const Jet& o) { return *this = *this + o; }
  Jet& operator-=(const Jet& o) { return *this = *this - o; }
  Jet& operator*=(const Jet& o) { return *this = *this * o; }
  Jet& operator/=(const Jet& o) { return *this = *this / o; }

  friend Jet exp(const Jet& a) {
    std::size_t n = a.c_.size();
    std::vector<BigFloat> e(n, BigFloat(a.precision()));
    e[0] = exp(a.c_[0]);
    for (std::size_t k = 1; k < n; ++k) {
      BigFloat acc(a.precision());
      for (std::size_t j = 1; j <= k; ++j) acc += a.c_[j] * e[k - j] * static_cast<long>(j);
      e[k] = acc / static_cast<long>(k);
    }
    return Jet(std::move(e));
  }
  friend Jet log(const Jet& a) {
    if (!(a.value() > 0L)) throw domain_error("Jet: log of nonpositive value");
    std::size_t n = a.c_.size();
    std::vector<BigFloat> l(n, BigFloat(a.precision()));
    l[0] = log(a.c_[0]);
    for (std::size_t k = 1; k < n; ++k) {
      BigFloat acc = a.c_[k] * static_cast<long>(k);
      for (std::size_t j = 1; j < k; ++j) acc -= l[j] * a.c_[k - j] * static_cast<long>(j);
      l[k] = acc / (a.c_[0] * static_cast<long>(k));
    }
    return Jet(std::move(l));
  }
  friend Jet sqrt(const Jet& a) { return exp(log(a) / 2L); }
  friend Jet pow(const Jet& a, const Jet& b) { return exp(b * log(a)); }
  friend Jet pow(const Jet& a, const BigFloat& b) { return exp(log(a) * b); }
  friend Jet pow(const Jet& a, long n) {
    if (n == 0) return a.lift(BigFloat(1L, a.precision()));
    if (n < 0) return a.lift(BigFloat(1L, a.precision())) / pow(a, -n);
    Jet r = a;
    for (long i = 1; i < n; ++i) r *= a;
    return r;
  }
  friend Jet log1p(const Jet& a) { return log(a + 1L); }

 private:
  std::vector<BigFloat> c_;
};

/// Helpers that let numeric templates treat BigFloat and Jet uniformly.
inline const BigFloat& value_of(const BigFloat& x) { return x; }
inline const BigFloat& value_of(const Jet& x) { return x.value(); }
inline BigFloat lift_like(const BigFloat&, const BigFloat& v) { return v; }
inline Jet lift_like(const Jet& like, const BigFloat& v) { return like.lift(v); }
inline int precision_of(const BigFloat& x) { return x.precision(); }
inline int precision_of(const Jet& x) { return x.precision(); }

}  // namespace gamma_asym
