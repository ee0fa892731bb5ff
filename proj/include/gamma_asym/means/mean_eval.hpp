#pragma once

#include <vector>

#include "gamma_asym/errors.hpp"
#include "gamma_asym/exact/big_float.hpp"
#include "gamma_asym/means/mean_expr.hpp"
#include "gamma_asym/numeric/jet.hpp"

namespace gamma_asym {

namespace detail {

// Near a = b the closed forms of I and L are 0/0; both are expanded in
// u = b/a - 1 instead. The series converge like u^k, and |u| < 2^(-prec/3).
inline constexpr int kNearDiagonalTerms = 40;

template <class T>
bool near_diagonal(const T& u, int precision) {
  BigFloat au = abs(value_of(u));
  return au < BigFloat::two_pow(-(precision / 3), precision);
}

template <class T>
T homogeneous_form(const std::vector<BigFloat>& c, const T& a, const T& b) {
  int n = static_cast<int>(c.size()) - 1;
  T sum = lift_like(a, BigFloat(precision_of(a)));
  for (int k = 0; k <= n; ++k) {
    if (c[static_cast<std::size_t>(k)].is_zero()) continue;
    sum = sum + pow(a, static_cast<long>(k)) * pow(b, static_cast<long>(n - k)) * c[static_cast<std::size_t>(k)];
  }
  return sum;
}

template <class R>
std::vector<BigFloat> floats(const std::vector<R>& v, int precision) {
  std::vector<BigFloat> r;
  r.reserve(v.size());
  for (const auto& x : v) r.push_back(to_float(x, precision));
  return r;
}

template <class R, class T>
T eval_mean_impl(const MeanExpr<R>& m, const T& a, const T& b, int prec) {
  switch (m.kind()) {
    case MeanKind::arithmetic:
      return (a + b) / 2L;
    case MeanKind::geometric:
      return sqrt(a * b);
    case MeanKind::identric: {
      T u = b / a - 1L;
      if (near_diagonal(u, prec)) {
        // ln(I/a) = Σ_{k>=2} (-1)^k u^(k-1) / (k(k-1))
        T s = lift_like(a, BigFloat(prec));
        T up = lift_like(a, BigFloat(1L, prec));
        for (long k = 2; k < kNearDiagonalTerms; ++k) {
          up = up * u;
          T term = up / (k * (k - 1));
          s = (k % 2 == 0) ? s + term : s - term;
        }
        return a * exp(s);
      }
      return exp((b * log(b) - a * log(a)) / (b - a) - 1L);
    }
    case MeanKind::logarithmic: {
      T u = b / a - 1L;
      if (near_diagonal(u, prec)) {
        // a / L = Σ_{k>=1} (-1)^(k+1) u^(k-1) / k
        T s = lift_like(a, BigFloat(1L, prec));
        T up = lift_like(a, BigFloat(1L, prec));
        for (long k = 2; k < kNearDiagonalTerms; ++k) {
          up = up * u;
          T term = up / k;
          s = (k % 2 == 1) ? s + term : s - term;
        }
        return a / s;
      }
      return (b - a) / (log(b) - log(a));
    }
    case MeanKind::power_product: {
      T lg = lift_like(a, BigFloat(prec));
      for (std::size_t i = 0; i < m.factors().size(); ++i) {
        lg = lg + log(eval_mean_impl(m.factors()[i], a, b, prec)) * BigFloat(m.weights()[i], prec);
      }
      return exp(lg);
    }
    case MeanKind::rational:
    case MeanKind::symmetric_rational: {
      T num = homogeneous_form(floats(m.p(), prec), a, b);
      T den = homogeneous_form(floats(m.q(), prec), a, b);
      if (value_of(den).is_zero()) throw domain_error("rational mean: denominator vanishes");
      return num / den;
    }
  }
  throw domain_error("eval_mean: unknown mean kind");
}

}  // namespace detail

/// M(a, b) at the given precision. T is BigFloat or Jet (for derivatives).
/// Coefficients are converted with to_float, so symbolic parameters are
/// rejected there.
template <class R, class T>
T eval_mean(const MeanExpr<R>& m, const T& a, const T& b, int precision) {
  if (!(value_of(a) > 0L) || !(value_of(b) > 0L)) throw domain_error("eval_mean: arguments must be positive");
  return detail::eval_mean_impl(m, a, b, precision);
}

/// Variant without the positivity check, for rational and arithmetic means
/// evaluated at shifted arguments that may touch zero.
template <class R, class T>
T eval_mean_unchecked(const MeanExpr<R>& m, const T& a, const T& b, int precision) {
  return detail::eval_mean_impl(m, a, b, precision);
}

}  // namespace gamma_asym
