#include <gtest/gtest.h>

#include <mpfr.h>

#include "support/gen.hpp"

using namespace gamma_asym;

TEST(BigRational, ParsesFractionsAndDecimals) {
  EXPECT_EQ(BigRational::parse("23/160"), BigRational(23, 160));
  EXPECT_EQ(BigRational::parse("-6/4"), BigRational(-3, 2));
  EXPECT_EQ(BigRational::parse("0.125"), BigRational(1, 8));
  EXPECT_EQ(BigRational::parse("010/08"), BigRational(5, 4));  // decimal, never octal
  EXPECT_THROW(BigRational::parse("0x10"), parse_error);
  EXPECT_THROW(BigRational::parse("1/0"), std::exception);
  EXPECT_THROW(BigRational::parse("abc"), parse_error);
}

TEST(BigRational, FieldAxioms) {
  auto e = gen::engine(1);
  for (int i = 0; i < 200; ++i) {
    auto a = gen::rational(e), b = gen::rational(e), c = gen::nonzero_rational(e);
    EXPECT_EQ((a + b) * c, a * c + b * c);
    EXPECT_EQ(a / c * c, a);
    EXPECT_EQ(c * c.inverse(), BigRational(1));
    EXPECT_EQ(a - a, BigRational(0));
  }
}

TEST(QuadExt, ArithmeticInQSqrt3) {
  auto e = gen::engine(2);
  for (int i = 0; i < 200; ++i) {
    QuadExt x = gen::surd(e), y = gen::surd(e), z = gen::surd(e);
    EXPECT_EQ((x + y) * z, x * z + y * z);
    EXPECT_EQ(x * y, y * x);
    if (!y.is_zero()) {
      EXPECT_EQ(x / y * y, x);
    }
    EXPECT_EQ(x.norm(), (x * x.conjugate()).rational_value());
  }
}

TEST(QuadExt, NormalizesRadicands) {
  // √12 = 2√3; rational results drop the surd.
  QuadExt v(BigRational(0), BigRational(1), BigInt(12));
  EXPECT_EQ(v, QuadExt(BigRational(0), BigRational(2), BigInt(3)));
  QuadExt r3(BigRational(0), BigRational(1), BigInt(3));
  EXPECT_TRUE((r3 * r3).is_rational());
  EXPECT_EQ((r3 * r3).rational_value(), BigRational(3));
}

TEST(QuadExt, MixedFieldsAreRejected) {
  QuadExt r2(BigRational(0), BigRational(1), BigInt(2));
  QuadExt r3(BigRational(0), BigRational(1), BigInt(3));
  EXPECT_THROW(r2 + r3, algebraic_error);
}

TEST(QuadExt, ExactSquareRoots) {
  EXPECT_EQ(sqrt_exact(BigRational(9, 4)), QuadExt(BigRational(3, 2)));
  EXPECT_EQ(sqrt_exact(BigRational(3, 4)), QuadExt(BigRational(0), BigRational(1, 2), BigInt(3)));
  // (2 + √3)² = 7 + 4√3
  QuadExt sq(BigRational(7), BigRational(4), BigInt(3));
  QuadExt root = sqrt_exact(sq);
  EXPECT_EQ(root * root, sq);
  EXPECT_THROW(sqrt_exact(QuadExt(BigRational(1), BigRational(1), BigInt(3))), algebraic_error);
}

TEST(QuadExt, RootsOfTheExample6Quadratic) {
  auto e = gen::engine(3);
  for (int i = 0; i < 50; ++i) {
    QuadExt r1 = gen::surd(e), r2 = gen::surd(e);
    // (X - r1)(X - r2) = X² - (r1 + r2) X + r1 r2
    auto roots = quad_roots(QuadExt(1), -(r1 + r2), r1 * r2);
    ASSERT_FALSE(roots.empty());
    for (const auto& r : roots) EXPECT_TRUE(r == r1 || r == r2);
  }
}

TEST(BigFloat, RoundTripsThroughDecimal) {
  BigFloat x = BigFloat::parse("1.072042464", 256);
  EXPECT_EQ(x.to_fixed(9), "1.072042464");
  EXPECT_EQ(BigFloat(BigRational(1, 3), 128).to_scientific(5), "3.3333e-01");
}

TEST(BigFloat, ElementaryFunctionsAgreeWithMpfr) {
  auto e = gen::engine(4);
  for (int i = 0; i < 50; ++i) {
    BigFloat x = gen::positive(e, 1e-3, 1e3, 256);
    BigFloat ref(256);
    mpfr_log(ref.get(), x.get(), MPFR_RNDN);
    EXPECT_TRUE(abs(log(x) - ref) <= abs(ref) * BigFloat::two_pow(-250, 256) + BigFloat::two_pow(-250, 256));
    EXPECT_TRUE(abs(exp(log(x)) - x) <= x * BigFloat::two_pow(-240, 256));
  }
}

TEST(BigFloat, QuadExtConversion) {
  QuadExt v(BigRational(129, 360), BigRational(-59, 360), BigInt(3));
  BigFloat f = to_float(v, 256);
  BigFloat ref = BigFloat(BigRational(129, 360), 256) - sqrt(BigFloat(3L, 256)) * BigFloat(BigRational(59, 360), 256);
  EXPECT_TRUE(abs(f - ref) < BigFloat::two_pow(-250, 256));
  EXPECT_EQ(f.to_fixed(7), "0.0744695");
}
