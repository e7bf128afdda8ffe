#include <gtest/gtest.h>

#include "qtop/evaluator.hpp"
#include "qtop/skein.hpp"

using namespace qtop;

class Skein : public ::testing::Test {
 protected:
  CycNum s = sqrt2_16();
  CycNum one = CycNum::one(16);
};

TEST_F(Skein, BaseValues) {
  EXPECT_EQ(skein_I(builtin("unknot")), one);
  EXPECT_EQ(skein_I(builtin("unlink2")), s);
  EXPECT_EQ(skein_I(SliceDiagram()), s.inv());
  EXPECT_EQ(skein_I(builtin("unknot_kink_pos")), one);
}

TEST_F(Skein, KnownLinks) {
  EXPECT_EQ(skein_I(builtin("whitehead")), s * -1L);
  EXPECT_TRUE(skein_I(builtin("hopf")).is_zero());
  EXPECT_EQ(skein_I(builtin("trefoil")), one * -1L);
}

TEST_F(Skein, HeuristicsAgree) {
  for (const auto& name : builtin_names())
    EXPECT_EQ(skein_I(builtin(name), SkeinHeuristic::FixedBase), skein_I(builtin(name), SkeinHeuristic::MinimizeBad))
        << name;
}

TEST_F(Skein, PdCodeBookkeeping) {
  const auto pd = to_pd(builtin("whitehead").diagram);
  EXPECT_EQ(pd.x.size(), builtin("whitehead").diagram.crossing_count());
  EXPECT_EQ(pd_component_count(pd), 2);
  EXPECT_EQ(pd_component_count(smooth_crossing(to_pd(builtin("unknot_kink_pos").diagram), 0)), 2);
}

TEST_F(Skein, Arf) {
  const auto u = arf(builtin("unknot").diagram);
  EXPECT_EQ(u.status, ArfStatus::Proper);
  EXPECT_EQ(u.epsilon, 0);
  EXPECT_EQ(arf(builtin("hopf").diagram).status, ArfStatus::NonProper);
  EXPECT_FALSE(arf(builtin("hopf").diagram).proper_by_linking);
  const auto w = arf(builtin("whitehead").diagram);
  EXPECT_EQ(w.status, ArfStatus::Proper);
  EXPECT_EQ(w.epsilon, 1);
  EXPECT_TRUE(w.proper_by_linking);
  EXPECT_EQ(arf(builtin("trefoil").diagram).epsilon, 1);
}

TEST_F(Skein, JonesBridge) {
  EXPECT_EQ(jones_from_skein(builtin("unknot")), s);
  EXPECT_EQ(jones_from_skein(with_framing(builtin("unknot"), {1})), CycNum::root(16, 3) * s);
  EXPECT_EQ(jones_from_skein(cable(builtin("unknot"), {2})), one * 2L);
}

TEST_F(Skein, ColoredViaCabling) {
  const QuantumAlgebra<ExactField> qa(4);
  std::vector<CablingTerm> trace;
  EXPECT_EQ(colored_via_cabling(builtin("unknot"), {3}, &trace), one);
  ASSERT_EQ(trace.size(), 2u);
  EXPECT_EQ(trace[0].J, one * 2L);
  EXPECT_EQ(trace[1].coefficient, -1);

  // color 1 deletes the component
  EXPECT_EQ(colored_via_cabling(builtin("hopf"), {1, 2}), s);
  EXPECT_EQ(colored_via_cabling(builtin("whitehead"), {2, 2}), evaluate_link(qa, builtin("whitehead"), {2, 2}));
  EXPECT_THROW(colored_via_cabling(builtin("whitehead"), {2}), DomainError);
  EXPECT_THROW(colored_via_cabling(builtin("unknot"), {4}), DomainError);
}

TEST_F(Skein, MemoisationIsReused) {
  SkeinEngine engine;
  engine.evaluate(builtin("whitehead").diagram);
  const auto first = engine.stats().nodes;
  engine.evaluate(builtin("whitehead").diagram);
  EXPECT_GE(engine.stats().memo_hits, 1u);
  EXPECT_LE(engine.stats().nodes, 2 * first);
}

TEST_F(Skein, BudgetExceeded) {
  SkeinEngine tiny(SkeinHeuristic::MinimizeBad, 3);
  EXPECT_THROW(tiny.evaluate(cable(builtin("whitehead"), {2, 1}).diagram), Error);
}
