#include <gtest/gtest.h>

#include "qtop/diagram.hpp"
#include "qtop/framed_link.hpp"
#include "qtop/slice_io.hpp"

using namespace qtop;

namespace {
std::vector<std::vector<long>> lm(const FramedLink& l) { return linking_matrix(l).entries; }
}  // namespace

TEST(Builtins, Shapes) {
  const auto u = builtin("unknot");
  EXPECT_EQ(u.component_count(), 1u);
  EXPECT_EQ(u.diagram.crossing_count(), 0u);
  EXPECT_EQ(u.framing, (std::vector<long>{0}));

  const auto h = builtin("hopf");
  EXPECT_EQ(h.component_count(), 2u);
  EXPECT_EQ(std::abs(lm(h)[0][1]), 1);
  EXPECT_EQ(lm(h)[0][1], lm(h)[1][0]);

  const auto w = builtin("whitehead");
  EXPECT_EQ(w.component_count(), 2u);
  EXPECT_EQ(lm(w), (std::vector<std::vector<long>>{{0, 0}, {0, 0}}));
  EXPECT_EQ(linking_matrix(w).total(), 0);
  EXPECT_EQ(signature(linking_matrix(w)), 0);

  EXPECT_EQ(builtin("trefoil").framing, (std::vector<long>{3}));
  EXPECT_EQ(builtin("unknot_kink_pos").framing, (std::vector<long>{1}));
  EXPECT_THROW(builtin("figure8"), DomainError);
}

TEST(Builtins, HopfLinkingMatrixAtZeroFraming) {
  const auto h = with_framing(builtin("hopf"), {0, 0});
  EXPECT_EQ(lm(h), (std::vector<std::vector<long>>{{0, 1}, {1, 0}}));
  EXPECT_EQ(signature(linking_matrix(h)), 0);
}

TEST(Builtins, PlusOneUnknot) {
  const auto u = with_framing(builtin("unknot"), {1});
  EXPECT_EQ(lm(u), (std::vector<std::vector<long>>{{1}}));
  EXPECT_EQ(signature(linking_matrix(u)), 1);
}

TEST(Composition, IdentityAndEmpty) {
  const auto d = parse_slices("strands 2 + -\nx+ 0\ncap 0 rl\n");
  EXPECT_EQ(compose(d, identity_diagram(d.bottom())).normalized(), d.normalized());
  EXPECT_EQ(tensor(d, SliceDiagram()), d);
  EXPECT_THROW(compose(d, identity_diagram({kUp, kUp})), Error);
}

TEST(Composition, CapOverCupCloses) {
  const SliceDiagram cup({}, {Generator::cup(0, Direction::LeftToRight)});
  const SliceDiagram cap(cup.top(), {Generator::cap(0, Direction::RightToLeft)});
  const auto loop = compose(cap, cup);
  EXPECT_TRUE(loop.closed());
  EXPECT_EQ(loop.component_count(), 1u);
}

TEST(Validation, NamesSlice) {
  try {
    SliceDiagram({kUp, kUp}, {Generator::identity(), Generator::cap(0, Direction::LeftToRight)});
    FAIL() << "cap on parallel strands accepted";
  } catch (const ValidationError& e) {
    EXPECT_EQ(e.slice(), 1u);
  }
  EXPECT_THROW(SliceDiagram({kUp}, {Generator::crossing(0, 1)}), ValidationError);
}

TEST(Cabling, Examples) {
  const auto two = cable(builtin("unknot"), {2});
  EXPECT_EQ(two.component_count(), 2u);
  EXPECT_EQ(lm(two), (std::vector<std::vector<long>>{{0, 0}, {0, 0}}));

  for (const auto& name : builtin_names()) {
    const auto l = builtin(name);
    const auto same = cable(l, std::vector<std::size_t>(l.component_count(), 1));
    EXPECT_EQ(same.diagram, materialize(l)) << name;
  }

  const auto plus = cable(with_framing(builtin("unknot"), {1}), {2});
  EXPECT_EQ(lm(plus), (std::vector<std::vector<long>>{{1, 1}, {1, 1}}));

  const auto deleted = cable(builtin("hopf"), {0, 1});
  EXPECT_EQ(deleted.component_count(), 1u);
  EXPECT_EQ(deleted.diagram.crossing_count(), 0u);
}

TEST(Resolve, SwitchAndSmooth) {
  const auto h = builtin("hopf");
  const auto switched = resolve(h.diagram, 0, ResolveMode::Switch);
  // one crossing flipped: half the signed mixed count drops to zero
  EXPECT_EQ(linking_matrix(switched, {0, 0}).entries[0][1], 0);
  const auto both = resolve(switched, 1, ResolveMode::Switch);
  EXPECT_EQ(linking_matrix(both, {0, 0}).entries[0][1], -1);

  const auto kink = builtin("unknot_kink_pos").diagram;
  const auto smoothed = resolve(kink, 0, ResolveMode::Smooth);
  EXPECT_EQ(smoothed.component_count(), 2u);
  EXPECT_EQ(smoothed.crossing_count(), 0u);
}

TEST(Moves, BlowUpOnEmpty) {
  const FramedLink empty{SliceDiagram(), {}};
  const auto u = apply_move(empty, MoveKind::BlowUpPositive, {});
  EXPECT_EQ(u.component_count(), 1u);
  EXPECT_EQ(lm(u), (std::vector<std::vector<long>>{{1}}));
}

TEST(Moves, PatternsAndErrors) {
  const auto t = builtin("trefoil").diagram;
  const auto r2 = apply_move(t, MoveKind::R2, {1, 0, false});
  EXPECT_EQ(r2.crossing_count(), t.crossing_count() + 2);
  const auto r0 = apply_move(t, MoveKind::R0KinkPair, {1, 1, true});
  EXPECT_EQ(r0.writhes(), t.writhes());
  EXPECT_THROW(apply_move(t, MoveKind::R3, {0, 0, false}), DomainError);
  const auto w = braid_closure(3, {1, 2, 1});
  const std::size_t first = w.crossing_slice(0);
  ASSERT_TRUE(r3_applicable(w, first));
  const auto moved = apply_move(w, MoveKind::R3, {first, 0, false});
  EXPECT_EQ(moved.crossing_count(), 3u);
  EXPECT_NE(moved, w);
}

TEST(Signature, ExactCongruence) {
  EXPECT_EQ(signature(std::vector<std::vector<long>>{{0, 1}, {1, 0}}), 0);
  EXPECT_EQ(signature(std::vector<std::vector<long>>{{2, 0}, {0, 3}}), 2);
  EXPECT_EQ(signature(std::vector<std::vector<long>>{{-1, 0, 0}, {0, 0, 0}, {0, 0, -5}}), -2);
  EXPECT_EQ(signature(std::vector<std::vector<long>>{}), 0);
}

TEST(SliceText, RoundTrip) {
  for (const auto& name : builtin_names()) {
    const auto d = materialize(builtin(name));
    EXPECT_EQ(parse_slices(format_slices(d)), d) << name;
  }
  const auto t = parse_slices("# a tangle\nstrands 3 + - +\nx- 1\nid\nx+ 0\n");
  EXPECT_EQ(parse_slices(format_slices(t)), t);
}

TEST(SliceText, ParseErrorsNameTheLine) {
  try {
    parse_slices("strands 2 + +\nx+ 0\nbogus 1\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
  }
  try {
    parse_slices("strands 2 + +\nx+ 0\ncap 0 lr\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
  }
  EXPECT_THROW(parse_slices("x+ 5\n"), ParseError);
}

TEST(Reverse, KeepsComponentsFlipsLinking) {
  const auto h = builtin("hopf").diagram;
  const auto r = reverse_component(h, 0);
  EXPECT_EQ(r.component_count(), 2u);
  EXPECT_EQ(linking_matrix(r, {0, 0}).entries[0][1], -linking_matrix(h, {0, 0}).entries[0][1]);
}
