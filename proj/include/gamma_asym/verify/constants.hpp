#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "gamma_asym/exact/big_float.hpp"
#include "gamma_asym/formulas/formula_eval.hpp"
#include "gamma_asym/formulas/presets.hpp"

namespace gamma_asym {

struct SharpConstant {
  std::optional<BigFloat> point;  // empty for x → ∞
  BigFloat ratio;                 // Γ(x+1) / (f(x)/√(2π))
  BigFloat exp_residual;          // Γ(x+1) / f(x)
};

/// Boundary ratios of Γ(x+1) against the formula. Points use unchecked
/// evaluation so that the closure of the domain (such as x = 0) is allowed.
template <class R>
std::vector<SharpConstant> sharp_constants(const Formula<R>& f, const std::vector<std::optional<BigFloat>>& points,
                                           int precision) {
  std::vector<SharpConstant> out;
  BigFloat hl = half_log_two_pi(precision);
  for (const auto& p : points) {
    if (!p) {
      out.push_back({std::nullopt, exp(hl), BigFloat(1L, precision)});
      continue;
    }
    BigFloat x = p->with_precision(precision);
    BigFloat res = formula_residual(f, x, precision, false);
    out.push_back({x, exp(res + hl), exp(res)});
  }
  return out;
}

/// lim f(x) as x → 0⁺ for residuals not defined at 0 (f2): sampled at
/// h = 2^-30 and h/2 with one Richardson step, 2·f(h/2) − f(h).
template <class R>
BigFloat residual_limit_at_zero(const Formula<R>& f, int precision) {
  BigFloat h = BigFloat::two_pow(-30, precision);
  BigFloat a = formula_residual(f, h, precision, false);
  BigFloat b = formula_residual(f, h / 2L, precision, false);
  return b * 2L - a;
}

/// A decimal constant printed alongside a closed form or a boundary ratio.
struct PublishedConstant {
  std::string id;
  std::string label;     // closed form or defining expression
  std::string decimal;   // digits as printed
  std::string preset;
  double point;          // boundary point x
  bool use_exp_residual;  // compare exp(f(x)) instead of the √(2π)-normalized ratio
  std::function<BigFloat(int)> closed_form;  // empty when only the ratio defines the constant
};

inline std::vector<PublishedConstant> published_constants() {
  auto e = [](int p) { return exp(BigFloat(1L, p)); };
  auto q = [](long a, long b, int p) { return BigFloat(BigRational(a, b), p); };
  std::vector<PublishedConstant> c;
  c.push_back({"f3_lower_real", "√(158e/69)", "2.4949", "example3", 0.0, false,
               [=](int p) { return sqrt(e(p) * q(158, 69, p)); }});
  c.push_back({"f3_lower_int", "(1118e/1647)^(3/2)", "2.5065", "example3", 1.0, false,
               [=](int p) { BigFloat v = e(p) * q(1118, 1647, p); return v * sqrt(v); }});
  c.push_back({"f4_lower_real", "e^(21/37)·√2", "2.4946", "example4", 0.0, false,
               [=](int p) { return exp(q(21, 37, p)) * sqrt(BigFloat(2L, p)); }});
  c.push_back({"f4_lower_int", "2√2·e^(423/277)/(3√3)", "2.5065", "example4", 1.0, false, [=](int p) {
                 return exp(q(423, 277, p)) * sqrt(BigFloat(8L, p)) / (sqrt(BigFloat(3L, p)) * 3L);
               }});
  c.push_back({"f5_upper_real", "e^(2987/39960)·√(2e)", "2.5126", "example5", 0.0, false,
               [=](int p) { return exp(q(2987, 39960, p)) * sqrt(e(p) * 2L); }});
  c.push_back({"f5_upper_int", "2√6·exp(829607/543240)/9", "2.5067", "example5", 1.0, false,
               [=](int p) { return exp(q(829607, 543240, p)) * sqrt(BigFloat(24L, p)) / 9L; }});
  c.push_back({"f1_upper_int", "2^(3/4)·e^(3/2)/3", "2.5124", "example1", 1.0, false,
               [=](int p) { return pow(BigFloat(2L, p), q(3, 4, p)) * exp(q(3, 2, p)) / 3L; }});
  c.push_back({"f2_upper_int", "e³/8", "2.5107", "example2", 1.0, false,
               [=](int p) { return exp(BigFloat(3L, p)) / 8L; }});
  c.push_back({"delta0", "exp f6(0)", "0.96259", "example6_m1", 0.0, true, {}});
  c.push_back({"delta1", "exp f6(1)", "0.99965", "example6_m1", 1.0, true, {}});
  c.push_back({"tau0", "exp f7(0)", "1.0020", "example6_m2", 0.0, true, {}});
  c.push_back({"tau1", "exp f7(1)", "1.0001", "example6_m2", 1.0, true, {}});
  return c;
}

struct ConstantCheck {
  PublishedConstant constant;
  BigFloat value;                    // boundary ratio from the formula
  std::optional<BigFloat> closed;    // closed form, when one is given
  bool digits_match = false;         // |value - decimal| <= one unit of the last printed digit
  bool closed_form_match = true;     // value equals the closed form to working precision
};

inline ConstantCheck check_constant(const PublishedConstant& c, int precision) {
  const auto& f = preset(c.preset).formula;
  auto r = sharp_constants(f, {BigFloat(c.point, precision)}, precision).front();
  ConstantCheck out{c, c.use_exp_residual ? r.exp_residual : r.ratio, std::nullopt};
  std::size_t dot = c.decimal.find('.');
  int digits = dot == std::string::npos ? 0 : static_cast<int>(c.decimal.size() - dot - 1);
  BigFloat printed = BigFloat::parse(c.decimal, precision);
  BigFloat ulp = pow(BigFloat(10L, precision), static_cast<long>(-digits));
  out.digits_match = abs(out.value - printed) <= ulp;
  if (c.closed_form) {
    out.closed = c.closed_form(precision);
    out.closed_form_match = abs(out.value - *out.closed) <= abs(*out.closed) * BigFloat::two_pow(32 - precision, precision);
  }
  return out;
}

}  // namespace gamma_asym
