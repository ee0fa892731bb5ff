#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gamma_asym/errors.hpp"
#include "gamma_asym/formulas/formula.hpp"
#include "gamma_asym/means/mean_series.hpp"
#include "gamma_asym/series/laurent_series.hpp"
#include "gamma_asym/series/log_affine.hpp"
#include "gamma_asym/special/lngamma_expansion.hpp"

namespace gamma_asym {

namespace detail {

inline int poly_degree(const std::vector<BigRational>& c) {
  int d = static_cast<int>(c.size()) - 1;
  while (d >= 0 && c[static_cast<std::size_t>(d)].is_zero()) --d;
  return d;
}

// P(x) / (lead · x^deg) as a series in t = 1/x; constant term 1.
inline LaurentSeries<BigRational> monic_tail(const std::vector<BigRational>& c, int trunc) {
  int d = poly_degree(c);
  if (d < 0) throw domain_error("correction term: zero polynomial");
  const BigRational& lead = c[static_cast<std::size_t>(d)];
  LaurentSeries<BigRational> s(trunc);
  for (int j = 0; j <= d && j < trunc; ++j) s.set(j, c[static_cast<std::size_t>(d - j)] / lead);
  return s;
}

}  // namespace detail

/// r(x) as a series in t through t^order. Throws if r does not vanish at
/// infinity.
inline LaurentSeries<BigRational> rterm_series(const RTerm& r, int order) {
  int trunc = order + 1;
  int dp = detail::poly_degree(r.num), dq = detail::poly_degree(r.den);
  if (dp < 0 || dq < 0) throw domain_error("correction term: zero polynomial");
  BigRational lead = r.num[static_cast<std::size_t>(dp)] / r.den[static_cast<std::size_t>(dq)];
  auto up = detail::monic_tail(r.num, trunc);
  auto uq = detail::monic_tail(r.den, trunc);
  auto one = LaurentSeries<BigRational>::constant(BigRational(1), trunc);
  if (r.kind == RTerm::Kind::log_rational) {
    if (dp != dq || !(lead == BigRational(1))) {
      throw domain_error("correction term c·ln P(x): P(x) must tend to 1 as x → ∞");
    }
    return (log1p(up - one) - log1p(uq - one)).scaled(r.c);
  }
  if (dq - dp < 1) throw domain_error("correction term P(x): P(x) must tend to 0 as x → ∞");
  return (up * reciprocal(uq)).truncated(trunc - (dq - dp)).shifted(dq - dp).scaled(lead * r.c);
}

/// ln f(x) - ½ ln 2π = a(t)·ln x + b(t), t = 1/x, through t^order.
template <class R>
LogAffine<R> formula_log(const Formula<R>& f, int order) {
  if (order < 1) throw domain_error("formula_log: order must be >= 1");
  // Terms of the form t^-1·s(t): s is needed one power further.
  int inner = order + 1;
  auto k = mean_series(f.K.mean, f.K.first, f.K.second, inner);
  auto m = mean_series(f.M.mean, f.M.first, f.M.second, inner);
  const auto& ns = f.sub_mean();
  auto n = mean_series(ns.mean, ns.first, ns.second, inner);
  auto one = LaurentSeries<R>::constant(R(1), inner + 1);
  LaurentSeries<R> a = k.shifted(-1);
  LaurentSeries<R> b = (k * log1p(m - one)).shifted(-1) - n.shifted(-1);
  for (const auto& term : f.r) {
    b += rterm_series(term, order).map([](const BigRational& q) { return R(q); });
  }
  return LogAffine<R>(a, b).truncated(order + 1);
}

/// lnΓ(x+1) - ln f(x) as a(t)·ln x + b(t).
template <class R>
LogAffine<R> error_series(const Formula<R>& f, int order) {
  return lngamma_expansion<R>(order) - formula_log(f, order);
}

/// How the residual lnΓ(x+1) - ln f(x) decays.
template <class R>
struct ErrorRate {
  enum class Kind { pure_power, log_order_residual, vanishes };
  Kind kind = Kind::vanishes;
  int power = 0;             // leading power of t (of the b part for pure_power)
  std::optional<R> leading;  // its coefficient

  const char* kind_name() const {
    switch (kind) {
      case Kind::pure_power: return "pure power";
      case Kind::log_order_residual: return "log-order residual";
      case Kind::vanishes: return "vanishes to order";
    }
    return "?";
  }
};

template <class R>
ErrorRate<R> classify_rate(const LogAffine<R>& e) {
  ErrorRate<R> r;
  if (!e.a().is_zero()) {
    r.kind = ErrorRate<R>::Kind::log_order_residual;
    r.power = e.a().valuation();
    r.leading = e.a().leading();
  } else if (!e.b().is_zero()) {
    r.kind = ErrorRate<R>::Kind::pure_power;
    r.power = e.b().valuation();
    r.leading = e.b().leading();
  }
  return r;
}

}  // namespace gamma_asym
