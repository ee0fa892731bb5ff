#include <gtest/gtest.h>

#include <string>
#include <utility>
#include <vector>

#include "support/gen.hpp"

using namespace gamma_asym;
using M = MeanExpr<QuadExt>;
using Q = BigRational;

namespace {

constexpr int kPrec = 256;

QuadExt s3(const Q& a, const Q& b) { return QuadExt(a, b, BigInt(3)); }

M s21(const Q& p) { return M::symmetric(2, {QuadExt(p), QuadExt((Q(1) - p * Q(2)) / Q(2))}, {QuadExt(Q(1, 2))}); }

M example3_mean() { return M::symmetric(3, {QuadExt(Q(23, 160)), QuadExt(Q(1, 2) - Q(23, 160))}, {QuadExt(Q(79, 240)), QuadExt(Q(1, 2) - Q(79, 240))}); }

M example5_mean() {
  Q p(3281, 20160), q(7303, 35280), r(111, 392);
  return M::symmetric(4, {QuadExt(p), QuadExt(q), QuadExt(Q(1, 2) - p - q)}, {QuadExt(r), QuadExt(Q(1, 2) - r)});
}

// H^{2,1} for the two surd branches.
M example6_mean(int branch) {
  int s = branch == 1 ? 1 : -1;
  QuadExt p = s3(Q(129, 360), Q(-59 * s, 360)), q = s3(Q(129, 360), Q(59 * s, 360));
  QuadExt r = s3(Q(90, 180), Q(-29 * s, 180));
  return M::rational({p, QuadExt(1) - p - q, q}, {r, QuadExt(1) - r});
}

std::vector<std::pair<std::string, M>> catalog() {
  return {
      {"A", M::arithmetic()},
      {"G", M::geometric()},
      {"I", M::identric()},
      {"L", M::logarithmic()},
      {"A^(2/3)G^(1/3)", M::power_product({M::arithmetic(), M::geometric()}, {Q(2, 3), Q(1, 3)})},
      {"S21(1/3)", s21(Q(1, 3))},
      {"S32 example3", example3_mean()},
      {"S43 example5", example5_mean()},
      {"H21 branch 1", example6_mean(1)},
      {"H21 branch 2", example6_mean(2)},
  };
}

bool close(const BigFloat& a, const BigFloat& b, int slack = 40) {
  return abs(a - b) <= max(abs(a), abs(b)) * BigFloat::two_pow(slack - kPrec, kPrec);
}

BigFloat f(double v) { return BigFloat(v, kPrec); }

}  // namespace

TEST(MeanEval, SpecValues) {
  EXPECT_TRUE(close(eval_mean(M::arithmetic(), f(1), f(3), kPrec), f(2)));
  EXPECT_TRUE(close(eval_mean(M::geometric(), f(1), f(4), kPrec), f(2)));
  EXPECT_TRUE(close(eval_mean(M::identric(), f(2.5), f(2.5), kPrec), f(2.5)));
  // S^{3,2}(2, 3) = 2.5·(6 + 23/80)/(6 + 79/240)
  BigFloat expect = f(2.5) * BigFloat(Q(6) + Q(23, 80), kPrec) / BigFloat(Q(6) + Q(79, 240), kPrec);
  EXPECT_TRUE(close(eval_mean(example3_mean(), f(2), f(3), kPrec), expect));
}

TEST(MeanEval, IdentricAndLogarithmicClosedForms) {
  // I(1, e) = e^(1/(e-1)) ; L(1, e) = e - 1
  BigFloat e = exp(f(1));
  BigFloat one = f(1);
  EXPECT_TRUE(close(eval_mean(M::identric(), one, e, kPrec), exp(one / (e - 1L))));
  EXPECT_TRUE(close(eval_mean(M::logarithmic(), one, e, kPrec), e - 1L));
}

TEST(MeanEval, RejectsNonpositiveArguments) {
  EXPECT_THROW(eval_mean(M::geometric(), f(0), f(1), kPrec), domain_error);
  EXPECT_THROW(eval_mean(M::arithmetic(), f(-1), f(1), kPrec), domain_error);
}

TEST(MeanAxioms, Reflexivity) {
  for (const auto& [name, m] : catalog()) {
    for (const BigFloat& a : {f(0.5), f(1), exp(f(1)), f(10)}) {
      EXPECT_TRUE(close(eval_mean(m, a, a, kPrec), a)) << name << " at " << a.to_string(10);
    }
  }
}

TEST(MeanAxioms, Homogeneity) {
  auto e = gen::engine(30);
  for (const auto& [name, m] : catalog()) {
    for (int i = 0; i < 20; ++i) {
      BigFloat a = gen::positive(e, 0.01, 100, kPrec), b = gen::positive(e, 0.01, 100, kPrec);
      for (long t : {2L, 10L}) {
        EXPECT_TRUE(close(eval_mean(m, a * t, b * t, kPrec), eval_mean(m, a, b, kPrec) * t))
            << name << " a = " << a.to_string(10) << " b = " << b.to_string(10);
      }
    }
  }
}

TEST(MeanAxioms, SymmetryOfSymmetricVariants) {
  auto e = gen::engine(31);
  for (const auto& [name, m] : catalog()) {
    if (!m.is_symmetric()) continue;
    for (int i = 0; i < 20; ++i) {
      BigFloat a = gen::positive(e, 0.01, 100, kPrec), b = gen::positive(e, 0.01, 100, kPrec);
      EXPECT_TRUE(close(eval_mean(m, a, b, kPrec), eval_mean(m, b, a, kPrec))) << name;
    }
  }
}

TEST(MeanAxioms, Example6MeansAreAsymmetric) {
  for (int branch : {1, 2}) {
    M m = example6_mean(branch);
    EXPECT_FALSE(m.is_symmetric());
    EXPECT_FALSE(close(eval_mean(m, f(1), f(3), kPrec), eval_mean(m, f(3), f(1), kPrec)));
  }
}

TEST(MeanAxioms, PartialsAtTheDiagonalSumToOne) {
  BigFloat h = BigFloat::two_pow(-20, kPrec);
  BigFloat tol = h * h * 10L;
  for (const auto& [name, m] : catalog()) {
    for (double c : {1.0, 3.0}) {
      auto d = mean_partials_check(m, f(c), h);
      EXPECT_TRUE(abs(d.da + d.db - 1L) <= tol) << name << " at c = " << c;
      if (m.is_symmetric()) {
        EXPECT_TRUE(abs(d.da - BigFloat(0.5, kPrec)) <= tol) << name;
      }
    }
  }
  auto d = mean_partials_check(example6_mean(1), f(1), h);
  EXPECT_FALSE(abs(d.da - d.db) <= tol);
}

TEST(MeanSeries, SpecExpansions) {
  using S = LaurentSeries<QuadExt>;
  auto a = mean_series(M::arithmetic(), QuadExt(0), QuadExt(1), 4);
  EXPECT_EQ(a.coeff(0), QuadExt(1));
  EXPECT_EQ(a.coeff(1), QuadExt(Q(1, 2)));
  EXPECT_TRUE(a.coeff(2).is_zero());
  auto g = mean_series(M::geometric(), QuadExt(0), QuadExt(1), 4);
  EXPECT_EQ(g.coeff(2), QuadExt(Q(-1, 8)));
  EXPECT_EQ(g.coeff(3), QuadExt(Q(1, 16)));
  auto i = mean_series(M::identric(), QuadExt(0), QuadExt(1), 4);
  EXPECT_EQ(i.coeff(1), QuadExt(Q(1, 2)));
  EXPECT_EQ(i.coeff(2), QuadExt(Q(-1, 24)));
  // reflexive branch: M(x+θ, x+θ)/x = 1 + θt exactly
  auto r = mean_series(example5_mean(), QuadExt(Q(1, 3)), QuadExt(Q(1, 3)), 6);
  EXPECT_EQ(r, S::from_coefficients(0, {QuadExt(1), QuadExt(Q(1, 3))}, r.order()));
}

TEST(MeanSeries, Example3ClosedForm) {
  // (1 + t/2)(1 + t + 23t²/80)/(1 + t + 79t²/240)
  using S = LaurentSeries<QuadExt>;
  int order = 8;
  auto s = mean_series(example3_mean(), QuadExt(0), QuadExt(1), order);
  int n = s.order();
  S num = S::from_coefficients(0, {QuadExt(1), QuadExt(Q(1, 2))}, n) *
          S::from_coefficients(0, {QuadExt(1), QuadExt(1), QuadExt(Q(23, 80))}, n);
  S den = S::from_coefficients(0, {QuadExt(1), QuadExt(1), QuadExt(Q(79, 240))}, n);
  EXPECT_EQ(s, num / den);
}

TEST(MeanSeries, AgreesWithEvaluation) {
  // Truncation at t^10 leaves an error of order x^-11 relative to x.
  for (const auto& [name, m] : catalog()) {
    auto s = mean_series(m, QuadExt(0), QuadExt(1), 10);
    for (long xi : {50L, 100L}) {
      BigFloat x(xi, kPrec);
      BigFloat series = evaluate(s, BigFloat(1L, kPrec) / x);
      BigFloat direct = eval_mean(m, x, x + 1L, kPrec) / x;
      EXPECT_TRUE(abs(series - direct) < pow(x, -11L) * 100L) << name << " at " << xi;
    }
  }
}

TEST(MeanValidity, S21CriterionBoundary) {
  auto bad = is_mean_check(s21(Q(2, 3)));
  EXPECT_FALSE(bad.is_mean);
  ASSERT_TRUE(bad.witness.has_value());
  BigFloat ratio = max(bad.witness->a, bad.witness->b) / min(bad.witness->a, bad.witness->b);
  EXPECT_TRUE(ratio > 4L) << ratio.to_string(10);
  EXPECT_TRUE(is_mean_check(s21(Q(1, 2))).is_mean);
  EXPECT_TRUE(is_mean_check(s21(Q(0))).is_mean);
  EXPECT_FALSE(is_mean_check(s21(Q(-1, 10))).is_mean);
}

TEST(MeanValidity, PaperMeansAccepted) {
  EXPECT_TRUE(is_mean_check(M::arithmetic()).is_mean);
  EXPECT_TRUE(is_mean_check(example5_mean()).is_mean);
  EXPECT_TRUE(is_mean_check(example6_mean(1)).is_mean);
  EXPECT_TRUE(is_mean_check(example6_mean(2)).is_mean);
  auto r = is_mean_check(example3_mean());
  EXPECT_TRUE(r.is_mean);
  EXPECT_EQ(r.samples_checked, 2 * MeanGrid{}.points);
}

TEST(MeanExpr, ConstructionInvariants) {
  EXPECT_THROW(M::power_product({M::arithmetic(), M::geometric()}, {Q(1, 2), Q(1, 3)}), domain_error);
  EXPECT_THROW(M::rational({QuadExt(1), QuadExt(1)}, {QuadExt(1)}), domain_error);
  EXPECT_THROW(M::symmetric(3, {QuadExt(Q(1, 4))}, {QuadExt(Q(1, 4)), QuadExt(Q(1, 4))}), domain_error);
  M m = example5_mean();
  EXPECT_TRUE(m.is_symmetric());
  EXPECT_EQ(m.p().size(), 5u);
  EXPECT_EQ(m.q().size(), 4u);
}
