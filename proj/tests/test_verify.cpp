#include <gtest/gtest.h>

#include <cmath>
#include <string>
#include <vector>

#include "support/gen.hpp"

using namespace gamma_asym;
using Q = BigRational;

namespace {

constexpr int kPrec = 256;

std::vector<BigFloat> rate_points() { return {BigFloat(100L, kPrec), BigFloat(1000L, kPrec), BigFloat(10000L, kPrec)}; }

}  // namespace

TEST(Rate, FittedPresetsConverge) {
  for (auto [name, k] : {std::pair{"example3", 5}, {"example4", 5}, {"example5", 7}, {"example6_m1", 4}, {"example6_m2", 4}}) {
    auto r = measure_rate(preset(name).formula, k, rate_points(), kPrec);
    ASSERT_TRUE(r.target.has_value()) << name;
    ASSERT_TRUE(r.deviation_at_largest.has_value());
    EXPECT_TRUE(*r.deviation_at_largest < BigFloat(0.005, kPrec)) << name << ": " << r.deviation_at_largest->to_string(6);
    EXPECT_TRUE(r.deviations_decreasing()) << name;
    EXPECT_FALSE(r.precision_warning) << name;
    BigFloat c = to_float(*r.target, kPrec);
    EXPECT_TRUE(abs(r.extrapolated - c) < abs(c) * BigFloat(1e-6, kPrec)) << name;
  }
}

TEST(Rate, StirlingAtTen) {
  // (lnΓ(11) - ln f(10))·10 = 1/12 - 1/(360·10²) + 1/(1260·10⁴) - ...
  auto r = measure_rate(preset("stirling").formula, 1, {BigFloat(10L, kPrec)}, kPrec);
  EXPECT_NEAR(r.scaled[0].to_double(), 1.0 / 12 - 1.0 / 36000 + 1.0 / 12600000, 1e-9);
  EXPECT_EQ(*r.target, QuadExt(Q(1, 12)));
}

TEST(Rate, MismatchedPowerHasNoTarget) {
  auto r = measure_rate(preset("example3").formula, 4, rate_points(), kPrec);
  EXPECT_FALSE(r.target.has_value());
  EXPECT_TRUE(r.deviations.empty());
  EXPECT_THROW(measure_rate(preset("example3").formula, 5, {BigFloat(10L, kPrec), BigFloat(5L, kPrec)}, kPrec),
               domain_error);
}

TEST(Rate, ExtrapolationIsExactOnPolynomials) {
  std::vector<BigFloat> h, y;
  for (long i = 1; i <= 4; ++i) {
    BigFloat x(BigRational(1, i), kPrec);
    h.push_back(x);
    y.push_back(x * x * x * 2L - x + 3L);
  }
  EXPECT_TRUE(abs(extrapolate_to_zero(h, y) - 3L) < BigFloat::two_pow(-240, kPrec));
}

TEST(Constants, PrintedDigitsAndClosedForms) {
  auto all = published_constants();
  EXPECT_EQ(all.size(), 12u);
  for (const auto& c : all) {
    auto r = check_constant(c, kPrec);
    EXPECT_TRUE(r.digits_match) << c.id << " = " << r.value.to_string(12) << " vs " << c.decimal;
    EXPECT_TRUE(r.closed_form_match) << c.id;
  }
}

TEST(Constants, IndependentDoubleOracles) {
  // Closed forms in plain double arithmetic against the multiprecision boundary ratios.
  const double e = std::exp(1.0);
  const std::vector<std::pair<std::string, double>> want{
      {"f3_lower_real", std::sqrt(158 * e / 69)},
      {"f3_lower_int", std::pow(1118 * e / 1647, 1.5)},
      {"f4_lower_real", std::exp(21.0 / 37) * std::sqrt(2.0)},
      {"f5_upper_real", std::exp(2987.0 / 39960) * std::sqrt(2 * e)},
      {"f2_upper_int", std::exp(3.0) / 8},
  };
  for (const auto& [id, v] : want) {
    for (const auto& c : published_constants()) {
      if (c.id == id) {
        EXPECT_NEAR(check_constant(c, kPrec).value.to_double(), v, 1e-12) << id;
      }
    }
  }
}

TEST(Constants, ResidualLimitAtZero) {
  // f2(0+) = 1 - ln√(2π): exp f2(0+)·√(2π) = e, the upper constant of the real-domain bound.
  BigFloat l = residual_limit_at_zero(preset("example2").formula, kPrec);
  BigFloat want = BigFloat(1L, kPrec) - half_log_two_pi(kPrec);
  EXPECT_TRUE(abs(l - want) < BigFloat(1e-9, kPrec));
  EXPECT_THROW(formula_residual(preset("example2").formula, BigFloat(0L, kPrec), kPrec, false), domain_error);
}

TEST(Constants, InteriorRatiosLieStrictlyBetweenTheBounds) {
  BigFloat root2pi = exp(half_log_two_pi(kPrec));
  BigFloat one(1L, kPrec);
  auto grid = log_grid(BigFloat(1e-2, kPrec), BigFloat(1e3, kPrec), 60);
  std::vector<std::optional<BigFloat>> pts(grid.begin(), grid.end());
  auto value = [](const char* id) {
    for (const auto& c : published_constants()) {
      if (c.id == std::string(id)) return check_constant(c, kPrec).value;
    }
    throw std::runtime_error(id);
  };
  auto between = [&](const char* name, bool exp_residual, const BigFloat& lo, const BigFloat& hi) {
    for (const auto& s : sharp_constants(preset(name).formula, pts, kPrec)) {
      const BigFloat& v = exp_residual ? s.exp_residual : s.ratio;
      EXPECT_TRUE(lo < v && v < hi) << name << " at " << s.point->to_string(8) << ": " << v.to_string(12);
    }
  };
  between("example3", false, value("f3_lower_real"), root2pi);
  between("example4", false, value("f4_lower_real"), root2pi);
  between("example5", false, root2pi, value("f5_upper_real"));
  between("example6_m1", true, value("delta0"), one);
  between("example6_m2", true, one, value("tau0"));
  auto inf = sharp_constants(preset("example3").formula, {std::nullopt}, kPrec).front();
  EXPECT_TRUE(abs(inf.ratio - root2pi) < BigFloat::two_pow(-240, kPrec));
}

TEST(Bounds, EverySweepPassesWithPositiveMargins) {
  const auto& all = bound_specs();
  EXPECT_EQ(all.size(), 22u);
  for (const auto& b : all) {
    auto r = inequality_sweep(b, kPrec);
    EXPECT_TRUE(r.pass) << b.name;
    ASSERT_TRUE(r.min_margin.has_value()) << b.name;
    EXPECT_TRUE(*r.min_margin > 0L) << b.name;
  }
}

TEST(Bounds, AttainedEndpointsAreFlagged) {
  auto r = inequality_sweep(bound_spec("example3_int"), kPrec);
  ASSERT_FALSE(r.rows.empty());
  EXPECT_TRUE(r.rows.front().attained);  // n = 1 realises the best constant
  for (std::size_t i = 1; i < r.rows.size(); ++i) EXPECT_FALSE(r.rows[i].attained);
  auto grid = sweep_grid(bound_spec("example3_int"), 1, 50, 0, kPrec);
  EXPECT_EQ(grid.size(), 50u);
}

TEST(Bounds, ViolationIsReported) {
  // Tightening the Ramanujan upper bound to the lower one must fail.
  BoundSpec b = bound_spec("ramanujan");
  b.upper = b.lower;
  auto r = inequality_sweep(b, kPrec);
  EXPECT_FALSE(r.pass);
  EXPECT_THROW(bound_spec("nope"), domain_error);
}

TEST(Probes, CompleteMonotonicityOfF1F2) {
  for (const char* f : {"f1", "f2"}) {
    auto grid = default_probe_grid(f, kPrec);
    EXPECT_TRUE(abs(grid.front() - BigFloat(0.1, kPrec)) < BigFloat(1e-12, kPrec));
    auto r = complete_monotonicity_probe(f, 3, grid, kPrec);
    EXPECT_TRUE(r.consistent()) << f;
    ASSERT_EQ(r.orders.size(), 4u);
    for (const auto& o : r.orders) EXPECT_FALSE(o.precision_insufficient) << f << " n=" << o.order;
  }
}

TEST(Probes, ClaimedSigns) {
  struct Claim {
    const char* f;
    int first, second;
  };
  for (auto c : {Claim{"f3", 1, -1}, Claim{"f5", -1, 1}, Claim{"f6", 1, -1}, Claim{"f7", -1, 1}}) {
    auto grid = default_probe_grid(c.f, kPrec);
    auto d1 = derivative_probe({c.f, 1, grid, c.first}, kPrec);
    auto d2 = derivative_probe({c.f, 2, grid, c.second}, kPrec);
    EXPECT_TRUE(d1.matches_expected()) << c.f;
    EXPECT_TRUE(d2.matches_expected()) << c.f;
  }
}

TEST(Probes, RecurrenceDifferences) {
  for (auto [f, s] : {std::pair{"f3", 1}, {"f4", 1}, {"f5", -1}}) {
    auto r = recurrence_difference_probe(f, default_probe_grid(f, kPrec, 30), s, kPrec);
    EXPECT_TRUE(r.matches_expected()) << f;
  }
}

TEST(Probes, StencilAgreesWithJets) {
  auto e = gen::engine(60);
  const auto& f = preset("example3").formula;
  for (int i = 0; i < 5; ++i) {
    BigFloat x = gen::positive(e, 0.2, 40, kPrec);
    for (int n : {3, 4}) {
      BigFloat a = residual_derivative(f, x, n, kPrec, DerivativeMethod::closed_form);
      BigFloat b = residual_derivative(f, x, n, kPrec, DerivativeMethod::jets);
      EXPECT_TRUE(abs(a - b) <= abs(b) * BigFloat(1e-15, kPrec)) << "n = " << n << ", x = " << x.to_string(8);
    }
  }
}

TEST(Probes, F4ReportsTheDiscrepancy) {
  auto r = f4_probe(default_probe_grid("f4", kPrec, 30), kPrec);
  EXPECT_TRUE(r.first.sign_constant);
  EXPECT_EQ(r.first.observed_sign, 1);
  EXPECT_TRUE(r.second.sign_constant);
  EXPECT_EQ(r.second.observed_sign, -1);
  EXPECT_NE(r.note.find("increasing and concave"), std::string::npos);
  EXPECT_NE(r.note.find("convex"), std::string::npos);
}

TEST(Probes, WrongExpectationAndDomain) {
  auto grid = default_probe_grid("f3", kPrec, 10);
  EXPECT_FALSE(derivative_probe({"f3", 1, grid, -1}, kPrec).matches_expected());
  EXPECT_THROW(derivative_probe({"f3", 1, {BigFloat(-0.6, kPrec)}, 1}, kPrec), domain_error);
  EXPECT_THROW(residual_function("f8"), domain_error);
  // any formula can be probed; the Stirling residual decreases
  auto s = derivative_probe(preset("stirling").formula, 0.0, {"stirling", 1, default_probe_grid("f1", kPrec, 20), -1}, kPrec);
  EXPECT_TRUE(s.matches_expected());
}

TEST(Probes, USeriesAndWilker) {
  EXPECT_EQ(u_series_coefficient(3), Q(11, 30));
  EXPECT_EQ(u_series_coefficient(4), Q(79, 1260));
  for (int n = 3; n <= 10; ++n) EXPECT_GT(u_series_coefficient(n).sign(), 0) << n;
  EXPECT_TRUE(u_series_coefficient(2).is_zero());
  for (const auto& t : log_grid(BigFloat(1e-3, kPrec), BigFloat(20L, kPrec), 200)) {
    EXPECT_GT(wilker_expression(t).sign(), 0) << t.to_string(8);
  }
  // 2t⁴/45 near zero
  BigFloat t(1e-3, kPrec);
  BigFloat lead = pow(t, 4L) * BigFloat(BigRational(2, 45), kPrec);
  EXPECT_TRUE(abs(wilker_expression(t) / lead - 1L) < BigFloat(1e-5, kPrec));
}
