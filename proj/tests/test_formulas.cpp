#include <gtest/gtest.h>

#include <string>
#include <vector>

#include "support/gen.hpp"

using namespace gamma_asym;
using Q = BigRational;

namespace {

constexpr int kPrec = 256;

QuadExt s3(const Q& a, const Q& b) { return QuadExt(a, b, BigInt(3)); }

BigFloat resid(const std::string& name, const BigFloat& x) { return formula_residual(preset(name).formula, x, kPrec); }

struct Leading {
  const char* preset;
  int power;
  QuadExt coeff;
};

}  // namespace

TEST(ErrorSeries, LeadingTermsOfEveryPreset) {
  const std::vector<Leading> table{
      {"stirling", 1, Q(1, 12)},
      {"burnside", 1, Q(-1, 24)},
      {"gosper", 2, Q(1, 144)},
      {"batir1", 2, Q(-1, 144)},
      {"mortici_m", 3, Q(1, 240)},
      {"ramanujan_upper", 4, Q(-11, 11520)},
      {"ramanujan_lower", 3, Q(7, 14400)},
      {"batir2", 3, Q(-1, 5760)},
      {"mortici_omega", 2, s3(Q(0), Q(1, 216))},
      {"mortici_sigma", 2, s3(Q(0), Q(-1, 216))},
      {"example1", 3, Q(11, 1440)},
      {"example2", 3, Q(1, 180)},
      {"example3", 5, Q(-18029, 29030400)},
      {"example4", 5, Q(-1517, 2419200)},
      {"example5", 7, Q(10981, 31610880)},
      {"example6_m1", 4, s3(Q(0), Q(-1481, 2332800))},
      {"example6_m2", 4, s3(Q(0), Q(1481, 2332800))},
  };
  ASSERT_EQ(table.size(), presets().size());
  for (const auto& row : table) {
    auto e = error_series(preset(row.preset).formula, 12);
    EXPECT_TRUE(e.a().is_zero()) << row.preset;
    auto rate = classify_rate(e);
    EXPECT_EQ(rate.kind, ErrorRate<QuadExt>::Kind::pure_power) << row.preset;
    EXPECT_EQ(rate.power, row.power) << row.preset;
    ASSERT_TRUE(rate.leading.has_value());
    EXPECT_EQ(*rate.leading, row.coeff) << row.preset << ": " << rate.leading->to_string();
  }
}

TEST(ErrorSeries, StirlingIsTheBernoulliTail) {
  auto e = error_series(preset("stirling").formula, 9);
  auto s = lngamma_expansion(9).b();
  for (int k = 1; k <= 9; ++k) EXPECT_EQ(e.b().coeff(k), QuadExt(s.coeff(k))) << k;
}

TEST(FormulaLog, StirlingAndBurnside) {
  auto st = formula_log(preset("stirling").formula, 6);
  EXPECT_EQ(st.a().coeff(-1), QuadExt(1));
  EXPECT_EQ(st.a().coeff(0), QuadExt(Q(1, 2)));
  EXPECT_EQ(st.b().coeff(-1), QuadExt(-1));
  for (int k = 0; k <= 6; ++k) EXPECT_TRUE(st.b().coeff(k).is_zero()) << k;
  // (x+1/2) ln(x+1/2) - (x+1/2) = (t⁻¹ + 1/2)(ln x + log1p(t/2)) - t⁻¹ - 1/2
  auto bu = formula_log(preset("burnside").formula, 6);
  using S = LaurentSeries<QuadExt>;
  int n = bu.b().order() + 2;
  S half_t = S::monomial(QuadExt(Q(1, 2)), 1, n);
  S k = S::monomial(QuadExt(1), -1, n) + S::constant(QuadExt(Q(1, 2)), n);
  S expect = k * log1p(half_t) - k;
  for (int j = -1; j < bu.b().order(); ++j) EXPECT_EQ(bu.b().coeff(j), expect.coeff(j)) << j;
}

TEST(ErrorSeries, GeometricExponentGivesLogOrderResidual) {
  // K = G(x, x+1) = x·√(1+t) with M = N = x + 1/2 leaves t/8 in the a part.
  Formula<QuadExt> f{"geometric_exponent",
                     {MeanExpr<QuadExt>::geometric(), QuadExt(0), QuadExt(1)},
                     arithmetic_at(QuadExt(0), QuadExt(1)),
                     arithmetic_at(QuadExt(0), QuadExt(1)),
                     {}};
  EXPECT_EQ(classify_shape(f), FormulaShape::centered_means);
  auto rate = classify_rate(error_series(f, 6));
  EXPECT_EQ(rate.kind, ErrorRate<QuadExt>::Kind::log_order_residual);
  EXPECT_EQ(rate.power, 1);
  EXPECT_EQ(*rate.leading, QuadExt(Q(1, 8)));
}

TEST(ErrorSeries, NumericConsistency) {
  // (lnΓ(x+1) - ln f(x))·x^k within 5% of c at x = 10³ and 0.5% at x = 10⁴.
  for (const auto& p : presets()) {
    auto rate = classify_rate(error_series(p.formula, 12));
    BigFloat c = to_float(*rate.leading, kPrec);
    for (auto [x, tol] : {std::pair{1000L, 0.05}, std::pair{10000L, 0.005}}) {
      BigFloat X(x, kPrec);
      BigFloat scaled = formula_residual(p.formula, X, kPrec) * pow(X, static_cast<long>(rate.power));
      EXPECT_TRUE(abs(scaled - c) <= abs(c) * BigFloat(tol, kPrec)) << p.name << " at " << x;
    }
  }
}

TEST(EvalFormula, StirlingAtTen) {
  // ln 10! - ln(√(2π·10)·10¹⁰e⁻¹⁰) is the Stirling tail 1/120 - 1/360000 + ...
  BigFloat x(10L, kPrec);
  BigFloat direct = lngamma_num(x, kPrec) - eval_formula(preset("stirling").formula, x, kPrec);
  BigFloat tail = BigFloat(Q(1, 120) - Q(1, 360000) + Q(1, 126000000), kPrec);
  EXPECT_TRUE(abs(direct - tail) < BigFloat(1e-10, kPrec));
  BigFloat ln_fact = log(BigFloat(3628800L, kPrec));
  EXPECT_TRUE(abs(lngamma_num(x, kPrec) - ln_fact) < BigFloat::two_pow(-240, kPrec));
}

TEST(EvalFormula, Example1MatchesTheDisplay) {
  BigFloat x(5L, kPrec);
  BigFloat a = x + BigFloat(0.5, kPrec), g = sqrt(x * (x + 1L));
  BigFloat m = exp((log(a) * 2L + log(g)) / 3L);
  BigFloat direct = half_log_two_pi(kPrec) + a * log(m) - a;
  EXPECT_TRUE(abs(eval_formula(preset("example1").formula, x, kPrec) - direct) < BigFloat::two_pow(-240, kPrec));
}

TEST(EvalFormula, DomainGuards) {
  EXPECT_THROW(eval_formula(preset("stirling").formula, BigFloat(-0.5, kPrec), kPrec), domain_error);
  EXPECT_NO_THROW(eval_formula(preset("burnside").formula, BigFloat(0.5, kPrec), kPrec));
  EXPECT_TRUE(formula_domain_start(preset("example3").formula, kPrec).is_zero());
  EXPECT_TRUE(formula_domain_start(preset("mortici_omega").formula, kPrec) < 0L);
}

TEST(EvalFormula, JetsAgreeWithFloats) {
  BigFloat x(3.25, kPrec);
  for (const auto& p : presets()) {
    Jet j = Jet::variable(x, 2);
    Jet v = eval_formula(p.formula, j, kPrec);
    EXPECT_TRUE(abs(v.value() - eval_formula(p.formula, x, kPrec)) < BigFloat::two_pow(-230, kPrec)) << p.name;
    // first derivative against a central difference
    BigFloat h = BigFloat::two_pow(-40, kPrec);
    BigFloat fd = (eval_formula(p.formula, x + h, kPrec) - eval_formula(p.formula, x - h, kPrec)) / (h * 2L);
    EXPECT_TRUE(abs(v.derivative(1) - fd) < BigFloat(1e-20, kPrec)) << p.name;
  }
}

TEST(QualityOrdering, GosperBeatsStirlingAndBurnsideAtTwenty) {
  BigFloat x(20L, kPrec);
  BigFloat g = abs(resid("gosper", x));
  EXPECT_TRUE(g < abs(resid("burnside", x)));
  EXPECT_TRUE(g < abs(resid("stirling", x)));
  BigFloat ten(10L, kPrec);
  EXPECT_TRUE(abs(resid("gosper", ten)) < abs(resid("stirling", ten)));
}

TEST(RamanujanBracket, LowerBelowGammaBelowUpper) {
  for (const auto& x : log_grid(BigFloat(1L, kPrec), BigFloat(100L, kPrec), 200)) {
    EXPECT_TRUE(resid("ramanujan_lower", x) > 0L) << x.to_string(10);
    EXPECT_TRUE(resid("ramanujan_upper", x) < 0L) << x.to_string(10);
  }
}

TEST(PsiError, ShiftedMeansTrackDigamma) {
  using M = MeanExpr<QuadExt>;
  BigFloat hundred(100L, kPrec);
  BigFloat e = psi_error(M::arithmetic(), QuadExt(0), QuadExt(1), hundred, kPrec);
  EXPECT_TRUE(abs(e) < abs(psi_num(BigFloat(101L, kPrec), kPrec) - log(hundred)));
  BigFloat half = psi_error(M::arithmetic(), QuadExt(Q(1, 2)), QuadExt(Q(1, 2)), BigFloat(10L, kPrec), kPrec);
  EXPECT_TRUE(half > 0L && half < BigFloat(1e-3, kPrec));  // about 1/(24x²)
  BigFloat prev(1L, kPrec);
  for (long x : {100L, 1000L, 10000L}) {
    BigFloat v = abs(psi_error(M::geometric(), QuadExt(0), QuadExt(1), BigFloat(x, kPrec), kPrec));
    EXPECT_TRUE(v < prev) << x;
    prev = v;
  }
  EXPECT_THROW(psi_error(M::arithmetic(), QuadExt(0), QuadExt(1), BigFloat(-0.5, kPrec), kPrec), domain_error);
}

TEST(PolygammaError, ShiftedMeansTrackPolygamma) {
  using M = MeanExpr<QuadExt>;
  BigFloat x(100L, kPrec);
  EXPECT_TRUE(abs(polygamma_error(1, M::arithmetic(), QuadExt(0), QuadExt(1), x, kPrec)) < BigFloat(1L, kPrec) / (x * x));
  BigFloat y(50L, kPrec);
  EXPECT_TRUE(abs(polygamma_error(2, M::arithmetic(), QuadExt(Q(1, 2)), QuadExt(Q(1, 2)), y, kPrec)) <
              BigFloat(2L, kPrec) / (y * y * y));
  BigFloat a = abs(polygamma_error(1, M::geometric(), QuadExt(0), QuadExt(1), BigFloat(100L, kPrec), kPrec));
  BigFloat b = abs(polygamma_error(1, M::geometric(), QuadExt(0), QuadExt(1), BigFloat(1000L, kPrec), kPrec));
  EXPECT_TRUE(b < a);
  EXPECT_THROW(polygamma_error(0, M::arithmetic(), QuadExt(0), QuadExt(1), x, kPrec), domain_error);
}

TEST(RTerm, MustVanishAtInfinity) {
  EXPECT_THROW(rterm_series(RTerm::log_of(Q(1), {Q(1), Q(0), Q(1)}, {Q(1)}), 6), std::exception);
  EXPECT_THROW(rterm_series(RTerm::fraction({Q(1), Q(1)}, {Q(1), Q(1)}), 6), std::exception);
  // ½ ln((x + 1/6)/x) = 1/12·t - 1/144·t² + ...
  auto s = rterm_series(RTerm::log_of(Q(1, 2), {Q(1, 6), Q(1)}, {Q(0), Q(1)}), 4);
  EXPECT_EQ(s.coeff(1), Q(1, 12));
  EXPECT_EQ(s.coeff(2), Q(-1, 144));
}

TEST(FormulaShapes, PresetsClassifyAndValidate) {
  for (const auto& p : presets()) {
    FormulaShape s = classify_shape(p.formula);
    EXPECT_TRUE(s == FormulaShape::separate_means || s == FormulaShape::shared_mean || s == FormulaShape::centered_means) << p.name;
    EXPECT_NO_THROW(validate_shape(p.formula, s));
    EXPECT_NO_THROW(validate_shape(p.formula, FormulaShape::general));
  }
  EXPECT_THROW(validate_shape(preset("example6_m1").formula, FormulaShape::separate_means), domain_error);
}

TEST(FormulaJson, RoundTripsEveryPreset) {
  for (const auto& p : presets()) {
    Json j = formula_to_json(p.formula);
    Formula<QuadExt> back = formula_from_json(Json::parse(j.dump()));
    EXPECT_EQ(formula_to_json(back).dump(), j.dump()) << p.name;
    EXPECT_EQ(error_series(back, 8), error_series(p.formula, 8)) << p.name;
  }
}

TEST(FormulaJson, StarEntriesAndErrors) {
  Json j = Json::parse(R"({"name": "s32", "K": {"mean": "arithmetic", "shifts": ["0", "1"]},
      "M": {"mean": {"kind": "symmetric_rational", "n": 3, "p": ["23/160", "*"], "q": ["79/240", "*"]}, "shifts": [0, 1]},
      "N": {"mean": "arithmetic", "shifts": ["0", "1"]}})");
  auto f = formula_from_json(j);
  EXPECT_EQ(classify_rate(error_series(f, 8)).leading, std::optional<QuadExt>(QuadExt(Q(-18029, 29030400))));
  j["shape"] = "shared_mean";
  EXPECT_THROW(formula_from_json(j), domain_error);
  j["shape"] = "no_such_shape";
  EXPECT_THROW(formula_from_json(j), parse_error);
  Json bad = Json::parse(R"({"name": "x", "K": {"mean": "arithmetic", "shifts": ["0", "1"]},
      "M": {"mean": {"kind": "rational", "p": ["1/2", "1/3", "1/3"], "q": ["1/2", "1/2"]}, "shifts": [0, 1]},
      "N": "same_as_M"})");
  EXPECT_THROW(formula_from_json(bad), domain_error);
}

TEST(Presets, CatalogLookup) {
  EXPECT_EQ(presets().size(), 17u);
  EXPECT_EQ(preset("stirling").tag, "Eq. S");
  EXPECT_EQ(preset("example5").tag, "Eq. N4/3");
  EXPECT_THROW(preset("nope"), domain_error);
}
