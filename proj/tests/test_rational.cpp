#include <gtest/gtest.h>

#include <stdexcept>

#include "cliffverify/gaussian_rational.hpp"
#include "cliffverify/rational.hpp"

namespace cliffverify {
namespace {

TEST(Rational, ConstructionAndReduction) {
  EXPECT_TRUE(Rational().is_zero());
  EXPECT_EQ(Rational(6, 4).str(), "3/2");
  EXPECT_EQ(Rational(-6, 4).str(), "-3/2");
  EXPECT_EQ(Rational(6, -4).str(), "-3/2");
  EXPECT_EQ(Rational(-6, -4).str(), "3/2");
  EXPECT_EQ(Rational(0, 7).str(), "0/1");
  EXPECT_THROW(Rational(1, 0), std::domain_error);
}

TEST(Rational, Parse) {
  EXPECT_EQ(Rational::parse("22/7"), Rational(22, 7));
  EXPECT_EQ(Rational::parse("-5"), Rational(-5));
  EXPECT_EQ(Rational::parse("4/6"), Rational(2, 3));
  EXPECT_THROW(Rational::parse("1/0"), std::domain_error);
}

TEST(Rational, Arithmetic) {
  const Rational half(1, 2);
  const Rational third(1, 3);
  EXPECT_EQ(half + third, Rational(5, 6));
  EXPECT_EQ(half - third, Rational(1, 6));
  EXPECT_EQ(half * third, Rational(1, 6));
  EXPECT_EQ(half / third, Rational(3, 2));
  EXPECT_EQ(-half, Rational(-1, 2));
  EXPECT_EQ(half.abs(), (-half).abs());
  EXPECT_THROW(half / Rational(), std::domain_error);
}

TEST(Rational, ComparisonAndSign) {
  EXPECT_LT(Rational(1, 3), Rational(1, 2));
  EXPECT_GT(Rational(-1, 3), Rational(-1, 2));
  EXPECT_EQ(Rational(2, 4), Rational(1, 2));
  EXPECT_EQ(Rational(-7).sign(), -1);
  EXPECT_EQ(Rational().sign(), 0);
  EXPECT_EQ(Rational(3, 5).sign(), 1);
  EXPECT_TRUE(Rational(8, 4).is_integer());
  EXPECT_FALSE(Rational(8, 3).is_integer());
}

TEST(Rational, BigValues) {
  // Exceeds 64-bit range; must stay exact.
  Rational big(1);
  for (int k = 0; k < 40; ++k) big *= Rational(10);
  Rational expected = big;
  Rational sum;
  for (int k = 0; k < 1000; ++k) sum += big / Rational(1000);
  EXPECT_EQ(sum, expected);
}

TEST(Rational, Gcd) {
  EXPECT_EQ(gcd(Rational(6), Rational(4)), Rational(2));
  EXPECT_EQ(gcd(Rational(1, 2), Rational(1, 3)), Rational(1, 6));
  EXPECT_EQ(gcd(Rational(-6), Rational(4)), Rational(2));
  EXPECT_EQ(gcd(Rational(), Rational(-5)), Rational(5));
  EXPECT_EQ(gcd(Rational(3, 4), Rational()), Rational(3, 4));
}

TEST(GaussianRational, Basics) {
  const GaussianRational z(Rational(1, 2), Rational(-3));
  EXPECT_EQ(z.re(), Rational(1, 2));
  EXPECT_EQ(z.im(), Rational(-3));
  EXPECT_FALSE(z.is_real());
  EXPECT_TRUE(GaussianRational(Rational(5)).is_real());
  EXPECT_TRUE(GaussianRational().is_zero());
  EXPECT_EQ(GaussianRational::i() * GaussianRational::i(), GaussianRational(-1));
}

TEST(GaussianRational, Arithmetic) {
  const GaussianRational a(Rational(1), Rational(2));
  const GaussianRational b(Rational(3), Rational(-1));
  EXPECT_EQ(a + b, GaussianRational(Rational(4), Rational(1)));
  EXPECT_EQ(a * b, GaussianRational(Rational(5), Rational(5)));
  EXPECT_EQ(a.conj(), GaussianRational(Rational(1), Rational(-2)));
  EXPECT_EQ(a.norm(), Rational(5));
  EXPECT_EQ((a / b) * b, a);
  EXPECT_EQ(a * a.conj(), GaussianRational(a.norm()));
  EXPECT_THROW(a / GaussianRational(), std::domain_error);
}

TEST(GaussianRational, RealFastPathsMatchGeneralPath) {
  const GaussianRational r(Rational(7, 3));  // purely real
  const GaussianRational z(Rational(2), Rational(5));
  // (a+0i)(c+di) must equal the general formula.
  EXPECT_EQ(r * z, GaussianRational(Rational(14, 3), Rational(35, 3)));
  EXPECT_EQ(z / r, GaussianRational(Rational(6, 7), Rational(15, 7)));
  EXPECT_EQ(z * GaussianRational(Rational(1)), z);
}

TEST(GaussianRational, Str) {
  EXPECT_EQ(GaussianRational(Rational(3, 2), Rational(1, 2)).str(), "3/2+1/2i");
  EXPECT_EQ(GaussianRational(Rational(0), Rational(-1)).str(), "0/1-1/1i");
  EXPECT_EQ(GaussianRational(Rational(4)).str(), "4/1");
  EXPECT_EQ(GaussianRational().str(), "0/1");
}

}  // namespace
}  // namespace cliffverify
