#pragma once

#include <optional>
#include <string>
#include <type_traits>
#include <vector>

#include "gamma_asym/errors.hpp"
#include "gamma_asym/exact/big_float.hpp"
#include "gamma_asym/formulas/formula_eval.hpp"
#include "gamma_asym/formulas/formula_series.hpp"

namespace gamma_asym {

struct RateReport {
  int k = 0;
  std::vector<BigFloat> xs;
  std::vector<BigFloat> scaled;      // (lnΓ(x+1) - ln f(x))·x^k
  BigFloat extrapolated;             // polynomial extrapolation in 1/x to 1/x = 0
  std::optional<QuadExt> target;     // exact leading coefficient when the residual is a pure power t^k
  std::vector<BigFloat> deviations;  // |scaled - target| / |target| per point
  std::optional<BigFloat> deviation_at_largest;
  bool precision_warning = false;    // residual within 2^16 ulps of lnΓ at some sample

  bool deviations_decreasing() const {
    for (std::size_t i = 1; i < deviations.size(); ++i) {
      if (!(deviations[i] < deviations[i - 1])) return false;
    }
    return !deviations.empty();
  }
};

/// Neville's scheme for the interpolating polynomial in h through (h_i, y_i), at h = 0.
inline BigFloat extrapolate_to_zero(const std::vector<BigFloat>& h, std::vector<BigFloat> y) {
  if (h.empty()) throw domain_error("extrapolate_to_zero: no samples");
  std::size_t n = h.size();
  for (std::size_t m = 1; m < n; ++m) {
    for (std::size_t i = 0; i + m < n; ++i) {
      // P_{i..i+m}(0) from P_{i..i+m-1}(0) and P_{i+1..i+m}(0)
      y[i] = (h[i + m] * y[i] - h[i] * y[i + 1]) / (h[i + m] - h[i]);
    }
  }
  return y[0];
}

template <class R>
RateReport measure_rate(const Formula<R>& f, int k, const std::vector<BigFloat>& xs, int precision) {
  if (xs.empty()) throw domain_error("measure_rate: no sample points");
  for (std::size_t i = 1; i < xs.size(); ++i) {
    if (!(xs[i - 1] < xs[i])) throw domain_error("measure_rate: sample points must be strictly increasing");
  }
  RateReport rep;
  rep.k = k;
  BigFloat noise = BigFloat::two_pow(16 - precision, precision);
  std::vector<BigFloat> hs;
  for (const auto& x0 : xs) {
    BigFloat x = x0.with_precision(precision);
    BigFloat lg = lngamma1(x);
    BigFloat res = lg - eval_formula(f, x, precision);
    if (abs(res) < noise * abs(lg)) rep.precision_warning = true;
    rep.xs.push_back(x);
    rep.scaled.push_back(res * pow(x, static_cast<long>(k)));
    hs.push_back(BigFloat(1L, precision) / x);
  }
  rep.extrapolated = extrapolate_to_zero(hs, rep.scaled);
  auto rate = classify_rate(error_series(f, std::max(k + 1, 2)));
  if constexpr (std::is_same_v<R, QuadExt> || std::is_same_v<R, BigRational>) {
    if (rate.kind == ErrorRate<R>::Kind::pure_power && rate.power == k) {
      rep.target = QuadExt(*rate.leading);
      BigFloat c = to_float(*rep.target, precision);
      for (const auto& s : rep.scaled) rep.deviations.push_back(abs(s - c) / abs(c));
      rep.deviation_at_largest = rep.deviations.back();
    }
  }
  return rep;
}

}  // namespace gamma_asym
