#include <gtest/gtest.h>

#include "qtop/tqft.hpp"

using namespace qtop;

class Tqft : public ::testing::Test {
 protected:
  QuantumAlgebra<ExactField> qa{4};
  const ExactField& f = qa.field();
  CycNum s = sqrt2_16();
  CycNum one = CycNum::one(16);
  CycNum i = CycNum::root(16, 4);
};

TEST_F(Tqft, SurgeryOnEmptyLinkAndUnknots) {
  EXPECT_EQ(z_invariant(qa, FramedLink{SliceDiagram(), {}}), one);
  EXPECT_EQ(z_invariant(qa, with_framing(builtin("unknot"), {1})), one);
  EXPECT_EQ(z_invariant(qa, with_framing(builtin("unknot"), {-1})), one);
  // S1 x S2: b * sum [k]^2 = (1 + 2 + 1) / 2
  EXPECT_EQ(z_invariant(qa, builtin("unknot")), one * 2L);
}

TEST_F(Tqft, ApproxSurgeryAtLevelFive) {
  const QuantumAlgebra<ApproxField> a5(5);
  EXPECT_NEAR(std::abs(z_invariant(a5, FramedLink{SliceDiagram(), {}}) - 1.0), 0.0, 1e-12);
  EXPECT_NEAR(std::abs(z_invariant(a5, with_framing(builtin("unknot"), {1}))), 1.0, 1e-9);
}

TEST_F(Tqft, SplitLinkTransferHasRankOne) {
  const auto t = transfer_matrix(qa, builtin("unlink2"));
  for (int a = 1; a <= 3; ++a)
    for (int b = 1; b <= 3; ++b) EXPECT_EQ(t.matrix(b - 1, a - 1), qa.quantum_integer(a) * qa.quantum_integer(b));
  EXPECT_EQ(rank(f, t.matrix), 1u);
  EXPECT_EQ(limit_rank(f, t.matrix), 1u);
  EXPECT_EQ(t.anomaly.c_exponent, -3);
  EXPECT_THROW(transfer_matrix(qa, builtin("unknot")), DomainError);
}

TEST_F(Tqft, WhiteheadTransferAtZeroFraming) {
  const auto m = transfer_matrix(qa, builtin("whitehead")).matrix;
  EXPECT_EQ(m(0, 0), one);
  EXPECT_EQ(m(0, 1), s);
  EXPECT_EQ(m(0, 2), one);
  EXPECT_EQ(m(1, 1), one * -2L);
  // J_{L,(i,3)} equals J_{L,(i,1)}: the third row repeats the first
  for (std::size_t c = 0; c < 3; ++c) EXPECT_EQ(m(2, c), m(0, c));
  EXPECT_EQ(rank(f, m), 2u);
  EXPECT_EQ(limit_rank(f, m), 2u);
}

TEST_F(Tqft, WhiteheadTransferAtDefaultFraming) {
  const auto m = transfer_matrix(qa, with_framing(builtin("whitehead"), default_whitehead_framing())).matrix;
  const CycNum w = i - one;
  EXPECT_EQ(m(0, 0), one);
  EXPECT_EQ(m(0, 1), w);
  EXPECT_EQ(m(1, 1), i * 2L);
  EXPECT_TRUE(determinant(f, m).is_zero());
  EXPECT_EQ(limit_rank(f, m), 2u);
}

TEST_F(Tqft, ReferenceDataIsSelfInconsistent) {
  // the quoted determinant is not the determinant of the reference matrix
  const auto det = determinant(f, reference_whitehead_matrix());
  EXPECT_NE(det, reference_whitehead_determinant());
  EXPECT_NEAR(det.approx().real(), -8.0 * std::numbers::sqrt2, 1e-9);
}

TEST(LimitRank, Basics) {
  const ExactField f;
  auto n = zeros(f, 2, 2);
  n(0, 1) = f.one();
  EXPECT_EQ(limit_rank(f, n), 0u);
  EXPECT_EQ(limit_rank(f, identity(f, 3)), 3u);
  auto j = zeros(f, 3, 3);
  j(0, 0) = f.one(), j(1, 2) = f.one();
  EXPECT_EQ(rank(f, j), 2u);
  EXPECT_EQ(limit_rank(f, j), 1u);
  EXPECT_THROW(limit_rank(f, zeros(f, 2, 3)), DomainError);
}

TEST(Comparison, PhaseDetection) {
  const auto p = reference_whitehead_matrix();
  Matrix<CycNum> rotated = p;
  for (std::size_t a = 0; a < 3; ++a)
    for (std::size_t b = 0; b < 3; ++b) rotated(a, b) = CycNum::root(16, 5) * p(a, b);
  const auto c = compare_up_to_phase(rotated, p);
  ASSERT_TRUE(c.global_phase.has_value());
  EXPECT_EQ(*c.global_phase, 5);
  EXPECT_EQ(c.entries_matching, 9u);
  const auto t = compare_up_to_phase(transpose(rotated), p);
  EXPECT_TRUE(t.transposed);
  EXPECT_EQ(phase_between(CycNum::root(16, 3), CycNum::one(16)), 3);
  EXPECT_FALSE(phase_between(sqrt2_16(), CycNum::one(16)).has_value());
}
