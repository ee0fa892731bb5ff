#pragma once

#include <algorithm>
#include <utility>

#include "gamma_asym/series/laurent_series.hpp"

namespace gamma_asym {

/// a(t) * ln x + b(t) with t = 1/x; ln x stays symbolic.
template <class R>
class LogAffine {
 public:
  LogAffine() = default;
  LogAffine(LaurentSeries<R> a, LaurentSeries<R> b) {
    int order = std::min(a.order(), b.order());
    a_ = a.truncated(order);
    b_ = b.truncated(order);
  }
  /// Plain series (no logarithmic part).
  explicit LogAffine(LaurentSeries<R> b) : LogAffine(LaurentSeries<R>(b.order()), std::move(b)) {}

  const LaurentSeries<R>& a() const { return a_; }
  const LaurentSeries<R>& b() const { return b_; }
  int order() const { return b_.order(); }
  bool is_plain() const { return a_.is_zero(); }

  LogAffine operator-() const { return {-a_, -b_}; }
  friend LogAffine operator+(const LogAffine& x, const LogAffine& y) { return {x.a_ + y.a_, x.b_ + y.b_}; }
  friend LogAffine operator-(const LogAffine& x, const LogAffine& y) { return {x.a_ - y.a_, x.b_ - y.b_}; }
  /// Multiplication by a plain series.
  friend LogAffine operator*(const LogAffine& x, const LaurentSeries<R>& s) { return {x.a_ * s, x.b_ * s}; }
  LogAffine truncated(int order) const { return {a_.truncated(order), b_.truncated(order)}; }

  friend bool operator==(const LogAffine& x, const LogAffine& y) { return x.a_ == y.a_ && x.b_ == y.b_; }

  template <class F>
  auto map(F f) const {
    using S = decltype(f(std::declval<const R&>()));
    return LogAffine<S>(a_.map(f), b_.map(f));
  }

 private:
  LaurentSeries<R> a_;
  LaurentSeries<R> b_;
};

}  // namespace gamma_asym
