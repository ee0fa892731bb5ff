#pragma once

#include "gamma_asym/exact/big_float.hpp"
#include "gamma_asym/series/laurent_series.hpp"
#include "gamma_asym/series/log_affine.hpp"

namespace gamma_asym {

/// Value of the truncated series at t (all known terms summed).
template <class R>
BigFloat evaluate(const LaurentSeries<R>& s, const BigFloat& t) {
  int prec = t.precision();
  BigFloat sum(prec);
  if (s.is_zero()) return sum;
  // Horner over t^valuation .. t^(order-1).
  for (int k = s.order() - 1; k >= s.valuation(); --k) {
    sum = sum * t + to_float(s.coeff(k), prec);
  }
  return sum * pow(t, static_cast<long>(s.valuation()));
}

/// a(1/x) ln x + b(1/x).
template <class R>
BigFloat evaluate(const LogAffine<R>& f, const BigFloat& x) {
  BigFloat t = BigFloat(1L, x.precision()) / x;
  BigFloat r = evaluate(f.b(), t);
  if (!f.is_plain()) r += evaluate(f.a(), t) * log(x);
  return r;
}

}  // namespace gamma_asym
