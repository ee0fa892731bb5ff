#pragma once

#include "gamma_asym/errors.hpp"
#include "gamma_asym/series/log_affine.hpp"
#include "gamma_asym/special/bernoulli.hpp"

namespace gamma_asym {

/// ln Γ(x+1) - ½ ln 2π = (t^-1 + ½) ln x - t^-1 + Σ B_2n/(2n(2n-1)) t^(2n-1),
/// with exact coefficients through t^order.
template <class R = BigRational>
LogAffine<R> lngamma_expansion(int order) {
  if (order < 1) throw domain_error("lngamma_expansion: order must be >= 1");
  int trunc = order + 1;
  LaurentSeries<R> a(trunc);
  a.set(-1, R(1));
  a.set(0, R(BigRational(1, 2)));
  LaurentSeries<R> b(trunc);
  b.set(-1, R(-1));
  for (int n = 1; 2 * n - 1 <= order; ++n) {
    BigRational c = bernoulli(2 * n) / BigRational(2L * n * (2L * n - 1));
    b.set(2 * n - 1, R(c));
  }
  return {a, b};
}

}  // namespace gamma_asym
