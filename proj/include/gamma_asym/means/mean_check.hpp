#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "gamma_asym/exact/big_float.hpp"
#include "gamma_asym/means/mean_eval.hpp"

namespace gamma_asym {

struct MeanWitness {
  BigFloat a;
  BigFloat b;
  std::optional<BigFloat> value;  // empty when M(a, b) is undefined there
};

struct MeanValidityReport {
  bool is_mean = true;
  std::optional<MeanWitness> witness;
  int samples_checked = 0;
};

struct MeanGrid {
  int points = 512;         // ratios per orientation
  double max_ratio = 1e4;   // ratios b/a log-spaced in [1, max_ratio]
  int slack_bits = 40;      // relative slack before a sample counts as a violation
  int precision = kDefaultPrecision;
};

/// Log-spaced, endpoint-inclusive points in [lo, hi].
inline std::vector<BigFloat> log_grid(const BigFloat& lo, const BigFloat& hi, int n) {
  std::vector<BigFloat> xs;
  if (n <= 1) {
    xs.push_back(lo);
    return xs;
  }
  BigFloat llo = log(lo);
  BigFloat step = (log(hi) - llo) / static_cast<long>(n - 1);
  for (int i = 0; i < n; ++i) xs.push_back(i == n - 1 ? hi : exp(llo + step * static_cast<long>(i)));
  return xs;
}

/// Samples min(a,b) <= M(a,b) <= max(a,b) on (1, r) and (r, 1) for the grid
/// ratios r. A sampling check, not a proof: the first violation found is
/// returned as the witness.
template <class R>
MeanValidityReport is_mean_check(const MeanExpr<R>& m, const MeanGrid& grid = {}) {
  int prec = grid.precision;
  MeanValidityReport report;
  BigFloat one(1L, prec);
  BigFloat slack = BigFloat::two_pow(-grid.slack_bits, prec);
  auto ratios = log_grid(one, BigFloat(grid.max_ratio, prec), grid.points);
  for (const auto& r : ratios) {
    for (int orient = 0; orient < 2; ++orient) {
      const BigFloat& a = orient == 0 ? one : r;
      const BigFloat& b = orient == 0 ? r : one;
      ++report.samples_checked;
      BigFloat lo = min(a, b), hi = max(a, b);
      try {
        BigFloat v = eval_mean(m, a, b, prec);
        if (v.is_nan() || v < lo * (1L - slack) || v > hi * (1L + slack)) {
          report.is_mean = false;
          report.witness = MeanWitness{a, b, v};
          return report;
        }
      } catch (const domain_error&) {
        report.is_mean = false;
        report.witness = MeanWitness{a, b, std::nullopt};
        return report;
      }
    }
  }
  return report;
}

struct MeanPartials {
  BigFloat da;
  BigFloat db;
};

/// Central differences of M at (c, c) with step h.
template <class R>
MeanPartials mean_partials_check(const MeanExpr<R>& m, const BigFloat& c, const BigFloat& h) {
  int prec = c.precision();
  BigFloat two_h = h * 2L;
  BigFloat da = (eval_mean(m, c + h, c, prec) - eval_mean(m, c - h, c, prec)) / two_h;
  BigFloat db = (eval_mean(m, c, c + h, prec) - eval_mean(m, c, c - h, prec)) / two_h;
  return {da, db};
}

}  // namespace gamma_asym
