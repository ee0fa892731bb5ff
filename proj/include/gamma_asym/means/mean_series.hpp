#pragma once

#include <vector>

#include "gamma_asym/errors.hpp"
#include "gamma_asym/means/mean_expr.hpp"
#include "gamma_asym/series/laurent_series.hpp"

namespace gamma_asym {

namespace detail {

// h_j(θ, σ) for j = 0..n-1.
template <class R>
std::vector<R> complete_homogeneous(const R& theta, const R& sigma, int n) {
  std::vector<R> h;
  std::vector<R> tp{R(1)}, sp{R(1)};
  for (int j = 1; j < n; ++j) {
    tp.push_back(tp.back() * theta);
    sp.push_back(sp.back() * sigma);
  }
  for (int j = 0; j < n; ++j) {
    R acc(0);
    for (int i = 0; i <= j; ++i) acc += sp[static_cast<std::size_t>(i)] * tp[static_cast<std::size_t>(j - i)];
    h.push_back(acc);
  }
  return h;
}

// Σ_{k>=2} (-1)^k h_{k-1} t^(k-1) / (k(k-1)) with h_j = Σ_i σ^i θ^(j-i):
// the series of ln I(1+θt, 1+σt).
template <class R>
LaurentSeries<R> identric_log(const R& theta, const R& sigma, int trunc) {
  LaurentSeries<R> s(trunc);
  std::vector<R> h = complete_homogeneous(theta, sigma, trunc);
  for (int k = 2; k - 1 < trunc; ++k) {
    BigRational c(k % 2 == 0 ? 1 : -1, static_cast<long>(k) * (k - 1));
    s.set(k - 1, h[static_cast<std::size_t>(k - 1)] * c);
  }
  return s;
}

// (ln b - ln a) / (b - a) at a = 1+θt, b = 1+σt: Σ_{k>=1} (-1)^(k+1) h_{k-1} t^(k-1)/k.
template <class R>
LaurentSeries<R> log_difference_quotient(const R& theta, const R& sigma, int trunc) {
  LaurentSeries<R> s(trunc);
  std::vector<R> h = complete_homogeneous(theta, sigma, trunc + 1);
  for (int k = 1; k - 1 < trunc; ++k) {
    BigRational c(k % 2 == 1 ? 1 : -1, k);
    s.set(k - 1, h[static_cast<std::size_t>(k - 1)] * c);
  }
  return s;
}

template <class R>
LaurentSeries<R> linear(const R& c0, const R& c1, int trunc) {
  LaurentSeries<R> s(trunc);
  s.set(0, c0);
  if (trunc > 1) s.set(1, c1);
  return s;
}

template <class R>
LaurentSeries<R> power(const LaurentSeries<R>& s, int e, int trunc) {
  LaurentSeries<R> r = LaurentSeries<R>::constant(R(1), trunc);
  for (int i = 0; i < e; ++i) r = r * s;
  return r;
}

template <class R>
LaurentSeries<R> mean_series_impl(const MeanExpr<R>& m, const R& theta, const R& sigma, int trunc) {
  const R one(1);
  switch (m.kind()) {
    case MeanKind::arithmetic:
      return linear(one, (theta + sigma) * BigRational(1, 2), trunc);
    case MeanKind::geometric: {
      auto lg = log1p(linear(R(0), theta, trunc)) + log1p(linear(R(0), sigma, trunc));
      return exp(lg.scaled(BigRational(1, 2)));
    }
    case MeanKind::identric:
      return exp(identric_log(theta, sigma, trunc));
    case MeanKind::logarithmic:
      return reciprocal(log_difference_quotient(theta, sigma, trunc));
    case MeanKind::power_product: {
      LaurentSeries<R> lg(trunc);
      for (std::size_t i = 0; i < m.factors().size(); ++i) {
        auto f = mean_series_impl(m.factors()[i], theta, sigma, trunc);
        lg += log1p(f - LaurentSeries<R>::constant(one, trunc)).scaled(m.weights()[i]);
      }
      return exp(lg);
    }
    case MeanKind::rational:
    case MeanKind::symmetric_rational: {
      auto a = linear(one, theta, trunc);
      auto b = linear(one, sigma, trunc);
      auto form = [&](const std::vector<R>& c) {
        int n = static_cast<int>(c.size()) - 1;
        LaurentSeries<R> s(trunc);
        for (int k = 0; k <= n; ++k) {
          if (c[static_cast<std::size_t>(k)].is_zero()) continue;
          s += (power(a, k, trunc) * power(b, n - k, trunc)) * c[static_cast<std::size_t>(k)];
        }
        return s;
      };
      return form(m.p()) * reciprocal(form(m.q()));
    }
  }
  throw series_error("mean_series: unknown mean kind");
}

}  // namespace detail

/// M(x+θ, x+σ)/x = M(1+θt, 1+σt) as a series in t = 1/x with coefficients
/// known through t^order. The constant term is 1 for every mean.
template <class R>
LaurentSeries<R> mean_series(const MeanExpr<R>& m, const R& theta, const R& sigma, int order) {
  if (order < 1) throw domain_error("mean_series: order must be >= 1");
  int trunc = order + 1;
  // reflexive: M(x+θ, x+θ) = x+θ exactly
  if (theta == sigma) return detail::linear(R(1), theta, trunc);
  return detail::mean_series_impl(m, theta, sigma, trunc);
}

}  // namespace gamma_asym
