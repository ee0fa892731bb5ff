#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gamma_asym/errors.hpp"
#include "gamma_asym/exact/big_rational.hpp"

namespace gamma_asym {

/// Powers below this are treated as a construction bug.
inline constexpr int kMinValuation = -2;

/// Truncated Laurent series in t = 1/x over a coefficient ring R.
///
/// R must support +, -, unary -, *, multiplication by BigRational, ==,
/// is_zero(), construction from int, and an ADL-visible ring_inverse(R).
/// Coefficients of t^k are known exactly for k < order(); everything from
/// t^order() on is unknown.
template <class R>
class LaurentSeries {
 public:
  explicit LaurentSeries(int order = 0) : low_(order), order_(order) {}

  /// c * t^power, known up to (excluding) t^order.
  static LaurentSeries monomial(R c, int power, int order) {
    LaurentSeries s(order);
    if (power < order) s.set(power, std::move(c));
    return s;
  }
  static LaurentSeries constant(R c, int order) { return monomial(std::move(c), 0, order); }

  /// Dense constructor from consecutive coefficients starting at t^low.
  static LaurentSeries from_coefficients(int low, std::vector<R> coeffs, int order) {
    LaurentSeries s(order);
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
      int k = low + static_cast<int>(i);
      if (k < order) s.set(k, std::move(coeffs[i]));
    }
    return s;
  }

  int order() const { return order_; }
  /// Lowest power with a nonzero coefficient, or order() for the zero series.
  int valuation() const { return low_; }
  bool is_zero() const { return low_ >= order_; }

  R coeff(int k) const {
    if (k >= order_) {
      throw series_error("coefficient of t^" + std::to_string(k) + " is beyond truncation order " +
                         std::to_string(order_));
    }
    if (k < low_) return R(0);
    return c_[static_cast<std::size_t>(k - low_)];
  }
  /// Leading coefficient; throws on the zero series.
  R leading() const {
    if (is_zero()) throw series_error("leading coefficient of zero series");
    return c_.front();
  }

  /// Sets the coefficient of t^k (k < order()).
  void set(int k, R value) {
    if (k >= order_) throw series_error("set: power beyond truncation order");
    if (value.is_zero() && (k < low_ || is_zero())) return;
    if (is_zero()) {
      low_ = k;
      c_.assign(static_cast<std::size_t>(order_ - k), R(0));
    } else if (k < low_) {
      c_.insert(c_.begin(), static_cast<std::size_t>(low_ - k), R(0));
      low_ = k;
    }
    c_[static_cast<std::size_t>(k - low_)] = std::move(value);
    normalize();
  }

  LaurentSeries truncated(int order) const {
    if (order >= order_) return *this;
    LaurentSeries r(order);
    for (int k = low_; k < order; ++k) r.set(k, coeff(k));
    return r;
  }

  /// Multiplies by t^k.
  LaurentSeries shifted(int k) const {
    LaurentSeries r(order_ + k);
    r.low_ = is_zero() ? order_ + k : low_ + k;
    r.c_ = c_;
    r.check_principal_part();
    return r;
  }

  template <class F>
  auto map(F f) const -> LaurentSeries<decltype(f(std::declval<const R&>()))> {
    using S = decltype(f(std::declval<const R&>()));
    LaurentSeries<S> r(order_);
    for (int k = low_; k < order_; ++k) r.set(k, f(coeff(k)));
    return r;
  }

  LaurentSeries operator-() const {
    LaurentSeries r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
  }

  friend LaurentSeries operator+(const LaurentSeries& x, const LaurentSeries& y) {
    return combine(x, y, [](const R& a, const R& b) { return a + b; });
  }
  friend LaurentSeries operator-(const LaurentSeries& x, const LaurentSeries& y) {
    return combine(x, y, [](const R& a, const R& b) { return a - b; });
  }

  friend LaurentSeries operator*(const LaurentSeries& x, const LaurentSeries& y) {
    int order = std::min(x.order_ + y.low_, y.order_ + x.low_);
    LaurentSeries r(order);
    if (x.is_zero() || y.is_zero()) return r;
    int lo = x.low_ + y.low_;
    if (lo >= order) return r;
    std::vector<R> acc(static_cast<std::size_t>(order - lo), R(0));
    for (std::size_t i = 0; i < x.c_.size(); ++i) {
      if (x.c_[i].is_zero()) continue;
      for (std::size_t j = 0; j < y.c_.size(); ++j) {
        std::size_t k = i + j;
        if (k >= acc.size()) break;
        if (y.c_[j].is_zero()) continue;
        acc[k] += x.c_[i] * y.c_[j];
      }
    }
    r.low_ = lo;
    r.c_ = std::move(acc);
    r.normalize();
    return r;
  }

  /// Scalar multiple by a ring element.
  friend LaurentSeries operator*(const LaurentSeries& x, const R& s) { return x.map_same([&](const R& c) { return c * s; }); }
  friend LaurentSeries operator*(const R& s, const LaurentSeries& x) { return x * s; }
  LaurentSeries scaled(const BigRational& q) const {
    return map_same([&](const R& c) { return c * q; });
  }

  LaurentSeries& operator+=(const LaurentSeries& o) { return *this = *this + o; }
  LaurentSeries& operator-=(const LaurentSeries& o) { return *this = *this - o; }
  LaurentSeries& operator*=(const LaurentSeries& o) { return *this = *this * o; }

  /// Equal coefficients on the common known range.
  friend bool operator==(const LaurentSeries& x, const LaurentSeries& y) {
    int order = std::min(x.order_, y.order_);
    int lo = std::min(x.low_, y.low_);
    for (int k = lo; k < order; ++k) {
      if (!(x.coeff(k) == y.coeff(k))) return false;
    }
    return true;
  }

 private:
  template <class S>
  friend class LaurentSeries;

  template <class F>
  LaurentSeries map_same(F f) const {
    LaurentSeries r = *this;
    for (auto& c : r.c_) c = f(c);
    r.normalize();
    return r;
  }

  template <class F>
  static LaurentSeries combine(const LaurentSeries& x, const LaurentSeries& y, F f) {
    int order = std::min(x.order_, y.order_);
    LaurentSeries r(order);
    int lo = std::min(x.low_, y.low_);
    if (lo >= order) return r;
    std::vector<R> acc;
    acc.reserve(static_cast<std::size_t>(order - lo));
    for (int k = lo; k < order; ++k) acc.push_back(f(x.coeff(k), y.coeff(k)));
    r.low_ = lo;
    r.c_ = std::move(acc);
    r.normalize();
    return r;
  }

  void normalize() {
    std::size_t lead = 0;
    while (lead < c_.size() && c_[lead].is_zero()) ++lead;
    if (lead == c_.size()) {
      c_.clear();
      low_ = order_;
      return;
    }
    if (lead > 0) {
      c_.erase(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(lead));
      low_ += static_cast<int>(lead);
    }
    check_principal_part();
  }

  void check_principal_part() const {
    if (!is_zero() && low_ < kMinValuation) {
      throw series_error("principal part reaches t^" + std::to_string(low_) + " (below t^" +
                         std::to_string(kMinValuation) + ")");
    }
  }

  int low_;
  int order_;
  std::vector<R> c_;  // coefficients of t^low_ .. t^(order_-1)
};

/// ln(1 + s) for valuation(s) >= 1.
template <class R>
LaurentSeries<R> log1p(const LaurentSeries<R>& s) {
  if (s.is_zero()) return LaurentSeries<R>(s.order());
  if (s.valuation() < 1) throw series_error("log1p: argument must have valuation >= 1");
  // (1+s) L' = s'  =>  k L_k = k s_k - sum_{j<k} j L_j s_{k-j}
  int n = s.order();
  std::vector<R> L(static_cast<std::size_t>(std::max(n, 1)), R(0));
  for (int k = 1; k < n; ++k) {
    R acc(0);
    for (int j = 1; j < k; ++j) {
      if (k - j < s.valuation() || L[j].is_zero()) continue;
      acc += L[j] * s.coeff(k - j) * BigRational(j);
    }
    L[k] = s.coeff(k) - acc * BigRational(1, k);
  }
  return LaurentSeries<R>::from_coefficients(0, std::move(L), n);
}

/// exp(s) for valuation(s) >= 1.
template <class R>
LaurentSeries<R> exp(const LaurentSeries<R>& s) {
  int n = s.order();
  if (n <= 0) return LaurentSeries<R>(n);
  if (!s.is_zero() && s.valuation() < 1) throw series_error("exp: argument must have valuation >= 1");
  // E' = s' E  =>  k E_k = sum_{j=1..k} j s_j E_{k-j}
  std::vector<R> E(static_cast<std::size_t>(n), R(0));
  E[0] = R(1);
  for (int k = 1; k < n; ++k) {
    R acc(0);
    for (int j = s.valuation(); j <= k; ++j) {
      if (E[k - j].is_zero()) continue;
      acc += s.coeff(j) * E[k - j] * BigRational(j);
    }
    E[k] = acc * BigRational(1, k);
  }
  return LaurentSeries<R>::from_coefficients(0, std::move(E), n);
}

/// 1/s. The leading coefficient must be invertible in R.
template <class R>
LaurentSeries<R> reciprocal(const LaurentSeries<R>& s) {
  if (s.is_zero()) throw series_error("reciprocal of the zero series");
  using gamma_asym::ring_inverse;
  int v = s.valuation();
  int rel = s.order() - v;  // relative precision
  R inv = ring_inverse(s.leading());
  std::vector<R> r(static_cast<std::size_t>(rel), R(0));
  r[0] = inv;
  for (int n = 1; n < rel; ++n) {
    R acc(0);
    for (int j = 1; j <= n; ++j) {
      R sj = s.coeff(v + j);
      if (sj.is_zero()) continue;
      acc += sj * r[n - j];
    }
    r[n] = -(acc * inv);
  }
  return LaurentSeries<R>::from_coefficients(-v, std::move(r), rel - v);
}

template <class R>
LaurentSeries<R> operator/(const LaurentSeries<R>& x, const LaurentSeries<R>& y) {
  return x * reciprocal(y);
}

/// base^exponent = exp(exponent * log1p(base - 1)). `log` always holds the
/// exponent-times-log series; `value` is set only when that series has
/// valuation >= 1, since exp of a nonzero constant has no ring representation.
template <class R>
struct PowAffine {
  LaurentSeries<R> log;
  std::optional<LaurentSeries<R>> value;
};

template <class R>
PowAffine<R> pow_affine(const LaurentSeries<R>& base, const LaurentSeries<R>& exponent) {
  int order = base.order();
  LaurentSeries<R> one = LaurentSeries<R>::constant(R(1), order);
  LaurentSeries<R> w = base - one;
  if (!w.is_zero() && w.valuation() < 1) throw series_error("pow_affine: base must have constant term 1");
  LaurentSeries<R> lg = exponent * log1p(w);
  if (lg.is_zero() || lg.valuation() >= 1) return {lg, exp(lg)};
  if (lg.valuation() == 0) return {lg, std::nullopt};
  throw series_error("pow_affine: exponent * log(base) has a pole; the power diverges");
}

}  // namespace gamma_asym
