#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "qtop/constants.hpp"
#include "qtop/cyclotomic.hpp"
#include "qtop/rational.hpp"

using namespace qtop;

namespace {
CycNum z(long k) { return CycNum::root(16, k); }
CycNum s() { return sqrt2_16(); }
}  // namespace

TEST(Rational, ReducedAndSerialized) {
  EXPECT_EQ(to_string(make_rational(6, -4)), "-3/2");
  EXPECT_EQ(to_string(make_rational(0, -7)), "0");
  EXPECT_THROW(make_rational(1, 0), DomainError);
  EXPECT_EQ(to_string(parse_rational("10/4")), "5/2");
  EXPECT_EQ(to_string(parse_rational("7")), "7");
  EXPECT_THROW(parse_rational("1/0"), Error);
  EXPECT_THROW(parse_rational("abc"), Error);
}

TEST(CycNum, RootArithmetic) {
  EXPECT_EQ(z(4) * z(4), z(8));
  EXPECT_EQ(z(8), CycNum::from_integer(16, -1));
  EXPECT_EQ(z(16), CycNum::one(16));
  EXPECT_EQ(z(-3) * z(3), CycNum::one(16));
}

TEST(CycNum, SqrtTwo) {
  EXPECT_EQ(s(), z(2) - z(6));
  EXPECT_EQ(s() * s(), CycNum::from_integer(16, 2));
  EXPECT_EQ(s().inv(), s() * Rational(1, 2));
  EXPECT_TRUE((s() * s()).is_rational());
  EXPECT_FALSE(s().is_rational());
}

TEST(CycNum, Approx) {
  const auto a = z(1).approx();
  EXPECT_NEAR(a.real(), std::cos(std::numbers::pi / 8), 1e-15);
  EXPECT_NEAR(a.imag(), std::sin(std::numbers::pi / 8), 1e-15);
  const auto m = CycNum::from_integer(16, -1).approx();
  EXPECT_DOUBLE_EQ(m.real(), -1.0);
  EXPECT_DOUBLE_EQ(m.imag(), 0.0);
  EXPECT_NEAR(s().approx().real(), std::numbers::sqrt2, 1e-12);
  EXPECT_NEAR(s().approx().imag(), 0.0, 1e-12);
}

TEST(CycNum, ConjugationAndPowers) {
  EXPECT_EQ(z(3).conj(), z(-3));
  EXPECT_EQ(s().conj(), s());
  EXPECT_EQ(s().pow(4), CycNum::from_integer(16, 4));
  EXPECT_EQ(s().pow(-2), CycNum::from_rational(16, Rational(1, 2)));
  EXPECT_EQ((z(1) + z(5)).pow(0), CycNum::one(16));
}

TEST(CycNum, Errors) {
  EXPECT_THROW(CycNum::zero(16).inv(), DomainError);
  EXPECT_THROW(CycNum::one(16) / CycNum::zero(16), DomainError);
  EXPECT_THROW(CycNum::one(16) + CycNum::one(8), DomainError);
}

TEST(CycNum, CanonicalForm) {
  // same value reached along different paths prints the same way
  const CycNum a = (z(1) + z(9)) * CycNum::from_integer(16, 3);
  EXPECT_TRUE(a.is_zero());
  const CycNum b = (s() + CycNum::one(16)) * (s() - CycNum::one(16));
  EXPECT_EQ(b.to_string(), CycNum::one(16).to_string());
}

TEST(Constants, LevelFour) {
  const auto k = constants(4);
  EXPECT_EQ(k.b, CycNum::from_rational(16, Rational(1, 2)));
  EXPECT_EQ(k.c, z(-3));
  EXPECT_EQ(k.t_bridge, z(1));
  EXPECT_EQ(k.t_rmatrix, z(-1));
  EXPECT_EQ(k.sqrt2, s());
  EXPECT_NEAR(std::abs(constants_approx(4).b - k.b.approx()), 0.0, 1e-14);
  EXPECT_NEAR(std::abs(constants_approx(4).c - k.c.approx()), 0.0, 1e-14);
}

TEST(Constants, OtherLevelsApproximateOnly) {
  EXPECT_THROW(constants(5), ApproximateOnly);
  EXPECT_NO_THROW(constants_approx(5));
  EXPECT_THROW(constants(1), DomainError);
}
