#include <gtest/gtest.h>

#include "support/gen.hpp"

using namespace gamma_asym;
using S = LaurentSeries<BigRational>;

namespace {

S one(int order) { return S::constant(BigRational(1), order); }

}  // namespace

TEST(LaurentSeries, ExpOfLog1pIsIdentity) {
  auto e = gen::engine(10);
  for (int i = 0; i < 60; ++i) {
    int order = static_cast<int>(gen::integer(e, 3, 12));
    S w = gen::series(e, 1, order);
    EXPECT_EQ(exp(log1p(w)), one(order) + w) << "w = " << to_string(w);
    EXPECT_EQ(log1p(exp(w) - one(order)), w);
  }
}

TEST(LaurentSeries, ReciprocalSquaredIsIdentity) {
  auto e = gen::engine(11);
  for (int i = 0; i < 60; ++i) {
    int order = static_cast<int>(gen::integer(e, 2, 12));
    S s = gen::series(e, static_cast<int>(gen::integer(e, -2, 2)), order);
    if (s.is_zero()) continue;
    S r = reciprocal(s);
    EXPECT_EQ(reciprocal(r).truncated(std::min(r.order(), s.order())), s.truncated(std::min(r.order(), s.order())));
    S prod = s * r;
    EXPECT_EQ(prod.coeff(0), BigRational(1));
    for (int k = prod.valuation(); k < prod.order(); ++k) {
      if (k != 0) {
        EXPECT_TRUE(prod.coeff(k).is_zero()) << "k = " << k;
      }
    }
  }
}

TEST(LaurentSeries, RingLaws) {
  auto e = gen::engine(12);
  for (int i = 0; i < 60; ++i) {
    S a = gen::series(e, 0, 8), b = gen::series(e, -1, 8), c = gen::series(e, 1, 8);
    EXPECT_EQ((a + b) * c, a * c + b * c);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ(a - a, S(8));
  }
}

TEST(LaurentSeries, TruncationAndShift) {
  S s = S::from_coefficients(0, {1, 2, 3, 4}, 4);
  EXPECT_EQ(s.shifted(1).coeff(4), BigRational(4));
  EXPECT_EQ(s.shifted(1).order(), 5);
  EXPECT_EQ(s.truncated(2).order(), 2);
  EXPECT_EQ(s.truncated(2).coeff(1), BigRational(2));
  EXPECT_THROW(s.truncated(2).coeff(3), series_error);
}

TEST(LaurentSeries, PowAffine) {
  // (1 + t)^2 exactly; (1 + 2t + t²)^(1/2) = 1 + t.
  S t = S::monomial(BigRational(1), 1, 8);
  auto sq = pow_affine(one(8) + t, S::constant(BigRational(2), 8));
  ASSERT_TRUE(sq.value.has_value());
  EXPECT_EQ(*sq.value, one(8) + t.scaled(2) + t * t);
  auto rt = pow_affine(one(8) + t.scaled(2) + t * t, S::constant(BigRational(1, 2), 8));
  EXPECT_EQ(*rt.value, one(8) + t);
  EXPECT_THROW(pow_affine(t, one(8)), series_error);
}

TEST(LaurentSeries, ExpOfNonzeroConstantIsRejected) {
  EXPECT_THROW(exp(one(4)), series_error);
}

TEST(Bernoulli, KnownValues) {
  EXPECT_EQ(bernoulli(0), BigRational(1));
  EXPECT_EQ(bernoulli(1), BigRational(-1, 2));
  EXPECT_EQ(bernoulli(2), BigRational(1, 6));
  EXPECT_EQ(bernoulli(12), BigRational(-691, 2730));
  EXPECT_EQ(bernoulli(20), BigRational(-174611, 330));
  for (int n = 3; n < 30; n += 2) EXPECT_TRUE(bernoulli(n).is_zero());
}

TEST(LngammaExpansion, StirlingCoefficients) {
  auto s = lngamma_expansion(9);
  EXPECT_EQ(s.b().coeff(1), BigRational(1, 12));
  EXPECT_EQ(s.b().coeff(3), BigRational(-1, 360));
  EXPECT_EQ(s.b().coeff(5), BigRational(1, 1260));
  EXPECT_EQ(s.b().coeff(7), BigRational(-1, 1680));
  EXPECT_EQ(s.b().coeff(9), BigRational(1, 1188));
  EXPECT_EQ(s.a().coeff(-1), BigRational(1));
  EXPECT_EQ(s.a().coeff(0), BigRational(1, 2));
}

TEST(LngammaExpansion, AgreesWithReferenceAtLargeX) {
  // Truncation error of the order-11 expansion at x = 50 is far below 1e-20.
  auto s = lngamma_expansion(11);
  for (long xi : {50L, 80L, 200L}) {
    BigFloat x(xi, 256);
    BigFloat approx = evaluate(s, x) + half_log_two_pi(256);
    EXPECT_TRUE(abs(approx - lngamma_num(x, 256)) < BigFloat(1e-20, 256)) << xi;
  }
}

TEST(SeriesFormat, PrettyPrint) {
  auto s = lngamma_expansion(5).b();
  EXPECT_EQ(to_string(s), "-t^-1 + 1/12·t - 1/360·t^3 + 1/1260·t^5 + O(t^6)");
  LaurentSeries<QuadExt> q(5);
  q.set(4, QuadExt(BigRational(0), BigRational(-1481, 2332800), BigInt(3)));
  EXPECT_EQ(to_string(q), "(-1481/2332800)√3·t^4 + O(t^5)");
}

TEST(SeriesFormat, JsonRoundTrip) {
  auto e = gen::engine(13);
  for (int i = 0; i < 30; ++i) {
    LaurentSeries<QuadExt> s(8);
    for (int k = -1; k < 8; ++k) {
      if (gen::integer(e, 0, 2) == 0) s.set(k, gen::surd(e));
    }
    Json j = to_json(s);
    EXPECT_EQ(series_from_json(Json::parse(j.dump())), s) << j.dump();
  }
}
