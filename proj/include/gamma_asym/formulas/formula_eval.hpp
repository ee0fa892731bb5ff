#pragma once

#include <vector>

#include "gamma_asym/errors.hpp"
#include "gamma_asym/exact/big_float.hpp"
#include "gamma_asym/formulas/formula.hpp"
#include "gamma_asym/means/mean_eval.hpp"
#include "gamma_asym/numeric/compose.hpp"
#include "gamma_asym/numeric/jet.hpp"
#include "gamma_asym/special/reference.hpp"

namespace gamma_asym {

/// Lower end of the formula domain: x > -min(1, θ, θ*, σ, σ*).
template <class R>
BigFloat formula_domain_start(const Formula<R>& f, int precision) {
  BigFloat lo(1L, precision);
  for (const ShiftedMean<R>* s : {&f.M, &f.sub_mean()}) {
    lo = min(lo, to_float(s->first, precision));
    lo = min(lo, to_float(s->second, precision));
  }
  return -lo;
}

namespace detail {

template <class T>
T poly_eval(const std::vector<BigFloat>& c, const T& x) {
  T acc = lift_like(x, BigFloat(precision_of(x)));
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
  return acc;
}

template <class R, class T>
T shifted_mean_value(const ShiftedMean<R>& s, const T& x, int prec) {
  return eval_mean_unchecked(s.mean, x + to_float(s.first, prec), x + to_float(s.second, prec), prec);
}

template <class T>
T rterm_value(const RTerm& r, const T& x, int prec) {
  T p = poly_eval(floats(r.num, prec), x);
  T q = poly_eval(floats(r.den, prec), x);
  if (value_of(q).is_zero()) throw domain_error("correction term: denominator vanishes");
  T ratio = p / q;
  if (r.kind == RTerm::Kind::rational_fn) return ratio * to_float(r.c, prec);
  if (!(value_of(ratio) > 0L)) throw domain_error("correction term: logarithm of a non-positive value");
  return log(ratio) * to_float(r.c, prec);
}

}  // namespace detail

/// ln f(x), including ½ ln 2π. T is BigFloat or Jet. With `checked` the formula
/// domain guard is applied; unchecked evaluation still throws where a
/// logarithm or denominator is undefined.
template <class R, class T>
T eval_formula(const Formula<R>& f, const T& x, int precision, bool checked = true) {
  if (checked && !(value_of(x) > formula_domain_start(f, precision))) {
    throw domain_error("eval_formula(" + f.name + "): x = " + value_of(x).to_string(12) +
                       " outside the domain x > " + formula_domain_start(f, precision).to_string(12));
  }
  T k = detail::shifted_mean_value(f.K, x, precision);
  T m = detail::shifted_mean_value(f.M, x, precision);
  T n = detail::shifted_mean_value(f.sub_mean(), x, precision);
  if (!(value_of(m) > 0L)) throw domain_error("eval_formula(" + f.name + "): base mean is not positive");
  T v = k * log(m) - n + half_log_two_pi(precision);
  for (const auto& term : f.r) v = v + detail::rterm_value(term, x, precision);
  return v;
}

/// lnΓ(x+1) - ln f(x).
template <class R, class T>
T formula_residual(const Formula<R>& f, const T& x, int precision, bool checked = true) {
  return lngamma1(x) - eval_formula(f, x, precision, checked);
}

/// ψ(x+1) - ln M(x+θ, x+σ).
template <class R>
BigFloat psi_error(const MeanExpr<R>& m, const R& theta, const R& sigma, const BigFloat& x, int precision) {
  BigFloat lo = min(BigFloat(1L, precision), min(to_float(theta, precision), to_float(sigma, precision)));
  if (!(x > -lo)) throw domain_error("psi_error: x must exceed -min(1, θ, σ)");
  BigFloat xp = x.with_precision(precision);
  BigFloat mv = eval_mean(m, xp + to_float(theta, precision), xp + to_float(sigma, precision), precision);
  return psi_num(xp + 1L, precision) - log(mv);
}

/// (-1)^(n-1) ψ^(n)(x+1) - (n-1)!/M(x+θ, x+σ)^n.
template <class R>
BigFloat polygamma_error(int n, const MeanExpr<R>& m, const R& theta, const R& sigma, const BigFloat& x,
                         int precision) {
  if (n < 1) throw domain_error("polygamma_error: n must be >= 1");
  BigFloat lo = min(BigFloat(1L, precision), min(to_float(theta, precision), to_float(sigma, precision)));
  if (!(x > -lo)) throw domain_error("polygamma_error: x must exceed -min(1, θ, σ)");
  BigFloat xp = x.with_precision(precision);
  BigFloat mv = eval_mean(m, xp + to_float(theta, precision), xp + to_float(sigma, precision), precision);
  BigFloat pg = polygamma_num(n, xp + 1L, precision);
  if (n % 2 == 0) pg = -pg;
  BigFloat fact(factorial(static_cast<unsigned long>(n - 1)), precision);
  return pg - fact / pow(mv, static_cast<long>(n));
}

}  // namespace gamma_asym
