#include <gtest/gtest.h>

#include "qtop/matrix.hpp"
#include "qtop/quantum_algebra.hpp"

using namespace qtop;

class Algebra : public ::testing::Test {
 protected:
  QuantumAlgebra<ExactField> qa{4};
  const ExactField& f = qa.field();
};

TEST_F(Algebra, QuantumIntegers) {
  EXPECT_EQ(qa.quantum_integer(1), CycNum::one(16));
  EXPECT_EQ(qa.quantum_integer(2), sqrt2_16());
  EXPECT_EQ(qa.quantum_integer(3), CycNum::one(16));
  EXPECT_TRUE(qa.quantum_integer(4).is_zero());
}

TEST_F(Algebra, TrivialModule) {
  const auto m = qa.module(1);
  EXPECT_TRUE(m.X(0, 0).is_zero());
  EXPECT_TRUE(m.Y(0, 0).is_zero());
  EXPECT_EQ(m.K(0, 0), CycNum::one(16));
}

TEST_F(Algebra, ColorRange) {
  EXPECT_THROW(qa.module(0), DomainError);
  EXPECT_THROW(qa.module(5), DomainError);
  EXPECT_NO_THROW(qa.module(4));
}

TEST_F(Algebra, TrivialColorBraidsTrivially) {
  for (int l = 1; l <= 3; ++l) {
    const auto& b = qa.braiding({1, false}, {l, false});
    EXPECT_TRUE(equal(f, b, identity(f, static_cast<std::size_t>(l))));
  }
}

TEST_F(Algebra, InversePair) {
  const BoundaryPoint v{2, false};
  EXPECT_TRUE(equal(f, multiply(f, qa.braiding(v, v), qa.braiding_inv(v, v)), identity(f, 4)));
  const BoundaryPoint d{2, true};
  EXPECT_TRUE(equal(f, multiply(f, qa.braiding_inv(d, v), qa.braiding(v, d)), identity(f, 4)));
}

TEST_F(Algebra, QuasiTriangularOnColorTwo) {
  const auto v = qa.module(2);
  const auto R = qa.universal_R(v, v);
  for (auto u : {AlgebraGenerator::X, AlgebraGenerator::Y, AlgebraGenerator::K})
    EXPECT_TRUE(equal(f, multiply(f, R, qa.coproduct(u, v, v)), multiply(f, qa.coproduct_op(u, v, v), R)));
}

TEST_F(Algebra, CupCapLoops) {
  const auto E1 = qa.cupcap(CupCapKind::E, 1).matrix, N1 = qa.cupcap(CupCapKind::N, 1).matrix;
  EXPECT_EQ(multiply(f, E1, qa.cupcap(CupCapKind::N_check, 1).matrix)(0, 0), CycNum::one(16));
  EXPECT_EQ(multiply(f, qa.cupcap(CupCapKind::E_check, 1).matrix, N1)(0, 0), CycNum::one(16));
  for (int k = 1; k <= 4; ++k) {
    const auto m = qa.module(k);
    auto trace = CycNum::zero(16);
    for (int i = 0; i < k; ++i) trace += multiply(f, m.K, m.K)(i, i);
    const auto loop = multiply(f, qa.cupcap(CupCapKind::E_check, k).matrix, qa.cupcap(CupCapKind::N, k).matrix)(0, 0);
    EXPECT_EQ(loop, trace);
    EXPECT_EQ(loop, qa.quantum_integer(k));
  }
}

TEST(ClebschGordan, Decompositions) {
  EXPECT_EQ(clebsch_gordan(2, 2, 4), (std::vector<int>{1, 3}));
  EXPECT_EQ(clebsch_gordan(1, 3, 4), (std::vector<int>{3}));
  EXPECT_EQ(clebsch_gordan(2, 3, 4), (std::vector<int>{2, 4}));
}

TEST(Matrices, RankDeterminantInverse) {
  const ExactField f;
  auto m = zeros(f, 2, 2);
  m(0, 0) = f.from_integer(1), m(0, 1) = f.from_integer(2), m(1, 0) = f.from_integer(3), m(1, 1) = f.from_integer(4);
  EXPECT_EQ(determinant(f, m), f.from_integer(-2));
  EXPECT_EQ(rank(f, m), 2u);
  EXPECT_TRUE(equal(f, multiply(f, m, inverse(f, m)), identity(f, 2)));
  auto s = m;
  s(1, 0) = f.from_integer(2), s(1, 1) = f.from_integer(4);
  EXPECT_EQ(rank(f, s), 1u);
  EXPECT_THROW(inverse(f, s), DomainError);
}

TEST(ApproxAlgebra, MatchesExactAtLevelFour) {
  const QuantumAlgebra<ExactField> exact(4);
  const QuantumAlgebra<ApproxField> approx(4);
  const auto& a = approx.braiding({2, false}, {3, true});
  const auto& e = exact.braiding({2, false}, {3, true});
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) EXPECT_NEAR(std::abs(a(i, j) - e(i, j).approx()), 0.0, 1e-12);
  const QuantumAlgebra<ApproxField> five(5);
  EXPECT_NEAR(five.quantum_integer(2).real(), 2 * std::cos(std::numbers::pi / 5), 1e-12);
}
