#include <gtest/gtest.h>

#include "qtop/evaluator.hpp"
#include "qtop/framed_link.hpp"

using namespace qtop;

class Evaluator : public ::testing::Test {
 protected:
  QuantumAlgebra<ExactField> qa{4};
  CycNum s = sqrt2_16();
  CycNum one = CycNum::one(16);
};

TEST_F(Evaluator, EmptyDiagramIsOne) { EXPECT_EQ(evaluate_closed(qa, SliceDiagram(), {}), one); }

TEST_F(Evaluator, UnknotGivesQuantumDimension) {
  const auto u = builtin("unknot");
  EXPECT_EQ(evaluate_link(qa, u, {1}), one);
  EXPECT_EQ(evaluate_link(qa, u, {2}), s);
  EXPECT_EQ(evaluate_link(qa, u, {3}), one);
  EXPECT_TRUE(evaluate_link(qa, u, {4}).is_zero());
}

TEST_F(Evaluator, UnknotFamily) {
  const auto fam = evaluate_colored_link_family(qa, builtin("unknot"), all_colorings(1, 4));
  ASSERT_EQ(fam.size(), 3u);
  EXPECT_EQ(fam.at({1}), one);
  EXPECT_EQ(fam.at({2}), s);
  EXPECT_EQ(fam.at({3}), one);
}

TEST_F(Evaluator, FramingChangeIsTwist) {
  // a +1 curl on color 2 multiplies by t^3 with t = zeta16
  EXPECT_EQ(evaluate_link(qa, builtin("unknot_kink_pos"), {2}), CycNum::root(16, 3) * s);
  EXPECT_EQ(evaluate_link(qa, with_framing(builtin("unknot_kink_pos"), {0}), {2}), s);
}

TEST_F(Evaluator, WhiteheadDisplayedValues) {
  const auto w = builtin("whitehead");
  EXPECT_EQ(evaluate_link(qa, w, {1, 1}), one);
  EXPECT_EQ(evaluate_link(qa, w, {3, 1}), one);
  EXPECT_EQ(evaluate_link(qa, w, {1, 2}), s);
  EXPECT_EQ(evaluate_link(qa, w, {2, 2}), s * s * -1L);
}

TEST_F(Evaluator, HopfAtColorTwo) { EXPECT_TRUE(evaluate_link(qa, with_framing(builtin("hopf"), {0, 0}), {2, 2}).is_zero()); }

TEST_F(Evaluator, TangleOperatorShape) {
  const SliceDiagram x({kDown, kDown}, {Generator::crossing(0, 1)});
  const auto op = evaluate(qa, x, {2, 3});
  EXPECT_EQ(op.matrix.rows(), 6u);
  EXPECT_EQ(op.matrix.cols(), 6u);
  EXPECT_EQ(op.codomain[0].color, 3);
  EXPECT_TRUE(equal(qa.field(), op.matrix, qa.braiding({2, false}, {3, false})));
}

TEST_F(Evaluator, ColorErrors) {
  EXPECT_THROW(evaluate_link(qa, builtin("unknot"), {5}), DomainError);
  EXPECT_THROW(evaluate_link(qa, builtin("hopf"), {2}), DomainError);
}

TEST_F(Evaluator, ApproxMatchesExact) {
  const QuantumAlgebra<ApproxField> aq(4);
  for (const auto& k : all_colorings(2, 4)) {
    const auto e = evaluate_link(qa, builtin("whitehead"), k).approx();
    EXPECT_NEAR(std::abs(evaluate_link(aq, builtin("whitehead"), k) - e), 0.0, 1e-9);
  }
}

TEST_F(Evaluator, ApproxAtLevelFive) {
  const QuantumAlgebra<ApproxField> aq(5);
  const auto v = evaluate_link(aq, builtin("unknot"), {3});
  EXPECT_NEAR(std::abs(v - aq.quantum_integer(3)), 0.0, 1e-12);
  EXPECT_NEAR(std::abs(evaluate_link(aq, builtin("unknot"), {5})), 0.0, 1e-12);
}
