#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gamma_asym/errors.hpp"
#include "gamma_asym/exact/big_float.hpp"
#include "gamma_asym/formulas/formula_eval.hpp"
#include "gamma_asym/formulas/presets.hpp"
#include "gamma_asym/means/mean_check.hpp"
#include "gamma_asym/numeric/jet.hpp"

namespace gamma_asym {

/// The residual functions f1..f7, lnΓ(x+1) minus a fitted formula, with the
/// open intervals on which their monotonicity is claimed.
struct ResidualFunction {
  std::string id;
  std::string preset;
  double domain_start;  // open lower end
  std::string claim;    // claimed behaviour, in words
};

inline const std::vector<ResidualFunction>& residual_functions() {
  static const std::vector<ResidualFunction> all{
      {"f1", "example1", 0.0, "completely monotone"},
      {"f2", "example2", 0.0, "completely monotone"},
      {"f3", "example3", -0.5, "increasing and concave"},
      {"f4", "example4", -0.5, "increasing and convex (statement); concave (proof)"},
      {"f5", "example5", -0.5, "decreasing and convex"},
      {"f6", "example6_m1", 0.0, "increasing and concave"},
      {"f7", "example6_m2", 0.0, "decreasing and convex"},
  };
  return all;
}

inline const ResidualFunction& residual_function(const std::string& id) {
  for (const auto& f : residual_functions()) {
    if (f.id == id) return f;
  }
  throw domain_error("unknown residual function: " + id + " (expected f1..f7)");
}

enum class DerivativeMethod {
  closed_form,  // jets through order 2, sixth-order central differences of f'' beyond
  jets,         // jets at every order
};

namespace detail {

inline BigFloat residual_jet_derivative(const Formula<QuadExt>& f, const BigFloat& x, int n, int prec) {
  Jet j = Jet::variable(x.with_precision(prec), n);
  return formula_residual(f, j, prec, false).derivative(n);
}

}  // namespace detail

/// f^(n)(x) for the residual of `f`, n <= 4.
inline BigFloat residual_derivative(const Formula<QuadExt>& f, const BigFloat& x, int n, int prec,
                                    DerivativeMethod method = DerivativeMethod::closed_form) {
  if (n < 0 || n > 4) throw domain_error("residual_derivative: order must lie in [0, 4]");
  if (n <= 2 || method == DerivativeMethod::jets) return detail::residual_jet_derivative(f, x, n, prec);
  // f^(n) as the (n-2)-th derivative of f'' by a sixth-order central stencil.
  BigFloat h = BigFloat::two_pow(-(prec / (n + 2)), prec);
  auto g = [&](long i) { return detail::residual_jet_derivative(f, x + h * i, 2, prec); };
  auto c = [&](long a, long b) { return BigFloat(BigRational(a, b), prec); };
  if (n == 3) {
    BigFloat s = (g(1) - g(-1)) * c(3, 4) - (g(2) - g(-2)) * c(3, 20) +
                 (g(3) - g(-3)) * c(1, 60);
    return s / h;
  }
  BigFloat s = (g(1) + g(-1)) * c(3, 2) - (g(2) + g(-2)) * c(3, 20) +
               (g(3) + g(-3)) * c(1, 90) - g(0) * c(49, 18);
  return s / (h * h);
}

/// Size of the individual terms of the n-th derivative; with the working
/// precision it fixes the level below which a sign is noise.
inline BigFloat derivative_noise_floor(const BigFloat& x, int n, int prec) {
  BigFloat one(1L, prec);
  BigFloat scale = n == 0 ? abs(lngamma_num(x, prec)) + one : abs(polygamma_num(n - 1, x + one, prec));
  BigFloat floor = scale * BigFloat::two_pow(48 - prec, prec);
  if (n > 2) floor = floor * BigFloat::two_pow(static_cast<long>(prec / (n + 2)) * (n - 2), prec);
  return floor;
}

struct ProbeSpec {
  std::string which;           // f1..f7
  int order = 1;               // derivative order n
  std::vector<BigFloat> grid;  // inside the open domain
  int expected_sign = 0;       // +1, -1, or 0 to only report
};

struct ProbeRow {
  BigFloat x;
  BigFloat value;
  int sign;
  bool below_noise;
};

struct ProbeReport {
  std::string which;
  int order = 0;
  std::vector<ProbeRow> rows;
  bool sign_constant = true;
  int observed_sign = 0;             // common sign when sign_constant
  std::optional<BigFloat> counterexample;
  bool precision_insufficient = false;
  int expected_sign = 0;
  bool matches_expected() const {
    return expected_sign == 0 ? sign_constant : sign_constant && observed_sign == expected_sign && !precision_insufficient;
  }
};

/// Log-spaced grid of the offsets x - start in [lo - start, hi - start].
inline std::vector<BigFloat> domain_grid(double start, double lo, double hi, int n, int prec) {
  BigFloat s(start, prec);
  auto offsets = log_grid(BigFloat(lo - start, prec), BigFloat(hi - start, prec), n);
  for (auto& o : offsets) o = o + s;
  return offsets;
}

inline std::vector<BigFloat> default_probe_grid(const std::string& which, int prec, int n = 60) {
  const auto& rf = residual_function(which);
  if (rf.domain_start < 0) return domain_grid(rf.domain_start, -0.4, 50, n, prec);
  return domain_grid(0, 0.1, 100, n, prec);
}

/// Probe of the residual lnΓ(x+1) - ln f(x) for any formula; `domain_start`
/// is the open lower end of the grid's domain. `spec.which` is only a label.
inline ProbeReport derivative_probe(const Formula<QuadExt>& f, double domain_start, const ProbeSpec& spec, int prec,
                                    DerivativeMethod method = DerivativeMethod::closed_form) {
  ProbeReport rep;
  rep.which = spec.which;
  rep.order = spec.order;
  rep.expected_sign = spec.expected_sign;
  BigFloat start(domain_start, prec);
  for (const auto& x : spec.grid) {
    if (!(x > start)) throw domain_error("probe grid point " + x.to_string(8) + " outside the domain of " + spec.which);
    BigFloat v = residual_derivative(f, x, spec.order, prec, method);
    bool noise = abs(v) < derivative_noise_floor(x, spec.order, prec);
    int s = v.sign() > 0 ? 1 : (v.sign() < 0 ? -1 : 0);
    rep.precision_insufficient = rep.precision_insufficient || noise;
    if (rep.rows.empty()) rep.observed_sign = s;
    if (s != rep.observed_sign || s == 0) {
      if (rep.sign_constant) rep.counterexample = x;
      rep.sign_constant = false;
    }
    rep.rows.push_back({x, v, s, noise});
  }
  if (!rep.sign_constant) rep.observed_sign = 0;
  return rep;
}

inline ProbeReport derivative_probe(const ProbeSpec& spec, int prec,
                                    DerivativeMethod method = DerivativeMethod::closed_form) {
  const auto& rf = residual_function(spec.which);
  return derivative_probe(preset(rf.preset).formula, rf.domain_start, spec, prec, method);
}

struct MonotonicityReport {
  std::string which;
  std::vector<ProbeReport> orders;  // n = 0..max_order, expected sign (-1)^n
  bool consistent() const {
    for (const auto& r : orders) {
      if (!r.matches_expected()) return false;
    }
    return !orders.empty();
  }
};

/// Checks (-1)^n f^(n) >= 0 for n = 0..max_order on the grid. Consistent with
/// complete monotonicity at best; never a proof.
inline MonotonicityReport complete_monotonicity_probe(const std::string& which, int max_order,
                                                      const std::vector<BigFloat>& grid, int prec) {
  if (max_order < 0 || max_order > 4) throw domain_error("complete_monotonicity_probe: max_order must lie in [0, 4]");
  MonotonicityReport rep;
  rep.which = which;
  for (int n = 0; n <= max_order; ++n) {
    rep.orders.push_back(derivative_probe({which, n, grid, n % 2 == 0 ? 1 : -1}, prec));
  }
  return rep;
}

/// f''(x+1) - f''(x) on the grid, the quantity whose sign drives the
/// concavity arguments.
inline ProbeReport recurrence_difference_probe(const std::string& which, const std::vector<BigFloat>& grid,
                                               int expected_sign, int prec) {
  const auto& f = preset(residual_function(which).preset).formula;
  ProbeReport rep;
  rep.which = which;
  rep.order = 2;
  rep.expected_sign = expected_sign;
  for (const auto& x : grid) {
    BigFloat v = residual_derivative(f, x + 1L, 2, prec) - residual_derivative(f, x, 2, prec);
    int s = v.sign() > 0 ? 1 : (v.sign() < 0 ? -1 : 0);
    bool noise = abs(v) < derivative_noise_floor(x, 2, prec);
    rep.precision_insufficient = rep.precision_insufficient || noise;
    if (rep.rows.empty()) rep.observed_sign = s;
    if (s != rep.observed_sign || s == 0) {
      if (rep.sign_constant) rep.counterexample = x;
      rep.sign_constant = false;
    }
    rep.rows.push_back({x, v, s, noise});
  }
  if (!rep.sign_constant) rep.observed_sign = 0;
  return rep;
}

/// ((2n-3)·2^(2n-2) - 4)/(2n-1)!, the coefficient of t^(2n-1) in the series
/// used for f1.
inline BigRational u_series_coefficient(int n) {
  BigInt pow2 = BigInt(1) << static_cast<mp_bitcnt_t>(2 * n - 2);
  return BigRational(BigInt(2 * n - 3) * pow2 - 4, factorial(static_cast<unsigned long>(2 * n - 1)));
}

/// (t/sinh t)² + t/tanh t - 2.
inline BigFloat wilker_expression(const BigFloat& t) {
  BigFloat q = t / sinh(t);
  return q * q + t / tanh(t) - 2L;
}

struct F4Finding {
  ProbeReport first;
  ProbeReport second;
  std::string note;
};

/// Measures the signs of f4' and f4''. Its statement and its proof disagree on
/// convexity, so only what is observed is reported.
inline F4Finding f4_probe(const std::vector<BigFloat>& grid, int prec) {
  F4Finding out{derivative_probe({"f4", 1, grid, 0}, prec), derivative_probe({"f4", 2, grid, 0}, prec), ""};
  auto word = [](const ProbeReport& r, const char* pos, const char* neg) {
    if (!r.sign_constant) return std::string("sign changes");
    return std::string(r.observed_sign > 0 ? pos : neg);
  };
  out.note = "f4 measured " + word(out.first, "increasing", "decreasing") + " and " +
             word(out.second, "convex", "concave") +
             "; the stated claim reads 'increasing and convex' while the argument derives concavity";
  return out;
}

}  // namespace gamma_asym
