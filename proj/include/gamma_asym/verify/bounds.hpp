#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "gamma_asym/errors.hpp"
#include "gamma_asym/exact/big_float.hpp"
#include "gamma_asym/formulas/formula_eval.hpp"
#include "gamma_asym/formulas/presets.hpp"
#include "gamma_asym/means/mean_check.hpp"
#include "gamma_asym/special/reference.hpp"

namespace gamma_asym {

using ScalarFn = std::function<BigFloat(const BigFloat& x, int precision)>;

/// lower(x) < value(x) < upper(x) on a domain. Points listed in
/// `attained_lower`/`attained_upper` are where the best constant is attained
/// with equality (the n = 1 end of the integer inequalities); there the
/// sweep checks equality instead of strictness.
struct BoundSpec {
  std::string name;
  std::string description;
  bool integer_domain = false;
  double from = 1, to = 100;  // default sweep range
  int points = 200;           // default grid size for real domains
  bool include_zero = false;  // prepend x = 0 to real grids (domains closed at 0)
  ScalarFn lower, value, upper;
  std::vector<double> attained_lower, attained_upper;
};

struct SweepRow {
  BigFloat x;
  BigFloat lower_margin;  // value - lower
  BigFloat upper_margin;  // upper - value
  bool ok;
  bool attained;
};

struct SweepReport {
  std::string name;
  bool pass = true;
  std::optional<BigFloat> min_margin;  // over non-attained points
  std::optional<BigFloat> min_margin_at;
  std::vector<SweepRow> rows;
};

namespace detail {

inline bool contains_point(const std::vector<double>& pts, const BigFloat& x) {
  for (double p : pts) {
    if (x == BigFloat(p, x.precision())) return true;
  }
  return false;
}

}  // namespace detail

inline std::vector<BigFloat> sweep_grid(const BoundSpec& b, double from, double to, int n, int precision) {
  if (b.integer_domain) {
    std::vector<BigFloat> xs;
    for (long k = static_cast<long>(from); k <= static_cast<long>(to); ++k) xs.emplace_back(k, precision);
    return xs;
  }
  if (!(from > 0) || !(to >= from)) throw domain_error("sweep grid needs 0 < from <= to");
  auto xs = log_grid(BigFloat(from, precision), BigFloat(to, precision), n);
  if (b.include_zero) xs.insert(xs.begin(), BigFloat(precision));
  return xs;
}

inline SweepReport inequality_sweep(const BoundSpec& b, const std::vector<BigFloat>& grid, int precision) {
  SweepReport rep;
  rep.name = b.name;
  BigFloat eq_tol = BigFloat::two_pow(-(precision / 2), precision);
  for (const auto& x : grid) {
    BigFloat v = b.value(x, precision);
    SweepRow row{x, v - b.lower(x, precision), b.upper(x, precision) - v, true, false};
    bool at_lo = detail::contains_point(b.attained_lower, x);
    bool at_hi = detail::contains_point(b.attained_upper, x);
    row.attained = at_lo || at_hi;
    bool lo_ok = at_lo ? abs(row.lower_margin) < eq_tol : row.lower_margin > 0L;
    bool hi_ok = at_hi ? abs(row.upper_margin) < eq_tol : row.upper_margin > 0L;
    row.ok = lo_ok && hi_ok;
    rep.pass = rep.pass && row.ok;
    for (const auto* m : {at_lo ? nullptr : &row.lower_margin, at_hi ? nullptr : &row.upper_margin}) {
      if (m && (!rep.min_margin || *m < *rep.min_margin)) {
        rep.min_margin = *m;
        rep.min_margin_at = x;
      }
    }
    rep.rows.push_back(std::move(row));
  }
  return rep;
}

inline SweepReport inequality_sweep(const BoundSpec& b, int precision) {
  return inequality_sweep(b, sweep_grid(b, b.from, b.to, b.points, precision), precision);
}

namespace detail {

inline ScalarFn lngamma_fn() {
  return [](const BigFloat& x, int p) { return lngamma_num(x.with_precision(p), p); };
}

// ln C + ln f(x) - ½ ln 2π for a preset f.
inline ScalarFn scaled_preset(const std::string& name, std::function<BigFloat(int)> ln_c) {
  return [name, ln_c](const BigFloat& x, int p) {
    return ln_c(p) + eval_formula(preset(name).formula, x.with_precision(p), p, false) - half_log_two_pi(p);
  };
}

inline std::function<BigFloat(int)> ln_const(std::function<BigFloat(int)> c) {
  return [c](int p) { return log(c(p)); };
}

inline std::function<BigFloat(int)> ln_sqrt_two_pi() {
  return [](int p) { return half_log_two_pi(p); };
}

// ln Γ(x+1) - ln f(x) at a fixed x, plus ½ ln 2π: the log of the best constant
// attained there.
inline std::function<BigFloat(int)> attained_at(const std::string& name, long x) {
  return [name, x](int p) {
    return formula_residual(preset(name).formula, BigFloat(x, p), p, false) + half_log_two_pi(p);
  };
}

inline BigFloat rational(long a, long b, int p) { return BigFloat(BigRational(a, b), p); }

}  // namespace detail

/// Named double inequalities.
inline std::vector<BoundSpec> bound_specs() {
  using namespace detail;
  std::vector<BoundSpec> v;
  auto formula_pair = [&](std::string name, std::string desc, bool integer, double from, double to,
                          const std::string& preset_name, std::function<BigFloat(int)> lo,
                          std::function<BigFloat(int)> hi) {
    BoundSpec b;
    b.name = std::move(name);
    b.description = std::move(desc);
    b.integer_domain = integer;
    b.from = from;
    b.to = to;
    b.lower = scaled_preset(preset_name, lo);
    b.value = lngamma_fn();
    b.upper = scaled_preset(preset_name, hi);
    return b;
  };

  {
    BoundSpec b;
    b.name = "ramanujan";
    b.description = "√π(x/e)^x(8x³+4x²+x+1/100)^(1/6) < Γ(x+1) < √π(x/e)^x(8x³+4x²+x+1/30)^(1/6), x >= 1";
    b.from = 1;
    b.to = 100;
    b.lower = [](const BigFloat& x, int p) { return eval_formula(preset("ramanujan_lower").formula, x.with_precision(p), p); };
    b.value = lngamma_fn();
    b.upper = [](const BigFloat& x, int p) { return eval_formula(preset("ramanujan_upper").formula, x.with_precision(p), p); };
    v.push_back(b);
  }
  v.push_back(formula_pair("batir2", "√2·e^(4/9)·g(x) < Γ(x+1) < √(2π)·g(x), g = (x/e)^x √(x+1/2) e^(-1/(6(x+3/8))), x > 0",
                           false, 1e-3, 50, "batir2",
                           ln_const([](int p) { return sqrt(BigFloat(2L, p)) * exp(rational(4, 9, p)); }),
                           ln_sqrt_two_pi()));
  v.push_back(formula_pair("mortici_omega", "√(2π)·g(x) < Γ(x+1) <= α√(2π)·g(x), α = 1.072042464, x >= 0", false, 1e-6,
                           50, "mortici_omega", ln_sqrt_two_pi(), [](int p) {
                             return log(BigFloat::parse("1.072042464", p)) + half_log_two_pi(p);
                           }));
  v.back().include_zero = true;
  v.push_back(formula_pair("mortici_sigma", "β√(2π)·g(x) < Γ(x+1) <= √(2π)·g(x), β = 0.988503589, x >= 0", false, 1e-6,
                           50, "mortici_sigma",
                           [](int p) { return log(BigFloat::parse("0.988503589", p)) + half_log_two_pi(p); },
                           ln_sqrt_two_pi()));
  v.back().include_zero = true;
  for (int k = 1; k <= 5; ++k) {
    BoundSpec b;
    b.name = "guo_qi_k" + std::to_string(k);
    b.description = "(k-1)!/x^k + k!/(2x^(k+1)) < (-1)^(k+1) ψ^(k)(x) < (k-1)!/x^k + k!/x^(k+1), k = " + std::to_string(k);
    b.from = 0.1;
    b.to = 1000;
    b.lower = [k](const BigFloat& x, int p) { return guo_qi_bounds(k, x.with_precision(p)).low; };
    b.value = [k](const BigFloat& x, int p) {
      BigFloat v = polygamma_num(k, x.with_precision(p), p);
      return k % 2 == 1 ? v : -v;
    };
    b.upper = [k](const BigFloat& x, int p) { return guo_qi_bounds(k, x.with_precision(p)).high; };
    v.push_back(b);
  }

  auto integer_pair = [&](std::string name, std::string desc, const std::string& preset_name,
                          std::function<BigFloat(int)> lo, std::function<BigFloat(int)> hi, bool lower_attained) {
    BoundSpec b = formula_pair(std::move(name), std::move(desc), true, 1, 50, preset_name, lo, hi);
    (lower_attained ? b.attained_lower : b.attained_upper).push_back(1.0);
    return b;
  };

  v.push_back(integer_pair("example1_int", "√(2π)·f(n) < n! < 2^(3/4)e^(3/2)/3·f(n)", "example1", ln_sqrt_two_pi(),
                           ln_const([](int p) { return pow(BigFloat(2L, p), rational(3, 4, p)) * exp(rational(3, 2, p)) / 3L; }),
                           false));
  v.push_back(formula_pair("example2_real", "√(2π)·f(x) < Γ(x+1) < e·f(x), x > 0", false, 1e-3, 100, "example2",
                           ln_sqrt_two_pi(), [](int p) { return BigFloat(1L, p); }));
  v.push_back(integer_pair("example2_int", "√(2π)·f(n) < n! < e³/8·f(n)", "example2", ln_sqrt_two_pi(),
                           [](int p) { return BigFloat(3L, p) - log(BigFloat(8L, p)); }, false));
  v.push_back(formula_pair("example3_real", "√(158e/69)·f(x) < Γ(x+1) < √(2π)·f(x), x > 0", false, 1e-3, 100,
                           "example3", [](int p) { return (BigFloat(1L, p) + log(rational(158, 69, p))) / 2L; },
                           ln_sqrt_two_pi()));
  v.push_back(integer_pair("example3_int", "(1118e/1647)^(3/2)·f(n) < n! < √(2π)·f(n)", "example3",
                           [](int p) { return (BigFloat(1L, p) + log(rational(1118, 1647, p))) * 3L / 2L; },
                           ln_sqrt_two_pi(), true));
  v.push_back(formula_pair("example4_real", "e^(21/37)√2·f(x) < Γ(x+1) < √(2π)·f(x), x > 0", false, 1e-3, 100,
                           "example4", [](int p) { return rational(21, 37, p) + log(BigFloat(2L, p)) / 2L; },
                           ln_sqrt_two_pi()));
  v.push_back(integer_pair("example4_int", "2√2·e^(423/277)/(3√3)·f(n) < n! < √(2π)·f(n)", "example4",
                           [](int p) { return rational(423, 277, p) + log(rational(8, 27, p)) / 2L; },
                           ln_sqrt_two_pi(), true));
  v.push_back(formula_pair("example5_real", "√(2π)·f(x) < Γ(x+1) < e^(2987/39960)√(2e)·f(x), x > 0", false, 1e-3, 100,
                           "example5", ln_sqrt_two_pi(), [](int p) {
                             return rational(2987, 39960, p) + (log(BigFloat(2L, p)) + 1L) / 2L;
                           }));
  v.push_back(integer_pair("example5_int", "√(2π)·f(n) < n! < 2√6·exp(829607/543240)/9·f(n)", "example5",
                           ln_sqrt_two_pi(),
                           [](int p) { return rational(829607, 543240, p) + log(rational(24, 81, p)) / 2L; }, false));
  v.push_back(formula_pair("example6_m1_real", "exp f6(0)·f(x) < Γ(x+1) < f(x), x > 0", false, 1e-3, 100,
                           "example6_m1", attained_at("example6_m1", 0), ln_sqrt_two_pi()));
  v.push_back(integer_pair("example6_m1_int", "exp f6(1)·f(n) < n! < f(n)", "example6_m1",
                           attained_at("example6_m1", 1), ln_sqrt_two_pi(), true));
  v.push_back(formula_pair("example6_m2_real", "f(x) < Γ(x+1) < exp f7(0)·f(x), x > 0", false, 1e-3, 100,
                           "example6_m2", ln_sqrt_two_pi(), attained_at("example6_m2", 0)));
  v.push_back(integer_pair("example6_m2_int", "f(n) < n! < exp f7(1)·f(n)", "example6_m2", ln_sqrt_two_pi(),
                           attained_at("example6_m2", 1), false));
  return v;
}

inline BoundSpec bound_spec(const std::string& name) {
  for (auto& b : bound_specs()) {
    if (b.name == name) return b;
  }
  throw domain_error("unknown bound: " + name);
}

}  // namespace gamma_asym
