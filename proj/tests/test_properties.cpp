#include <gtest/gtest.h>

#include "qtop/properties.hpp"

using namespace qtop;

namespace {
void expect_all(const std::vector<PropertyResult>& results) {
  ASSERT_FALSE(results.empty());
  for (const auto& r : results) EXPECT_TRUE(r.passed) << r.name << ": " << r.detail;
}
}  // namespace

TEST(Properties, Field) { expect_all(field_properties(kDefaultSeed)); }
TEST(Properties, Algebra) { expect_all(algebra_properties()); }
TEST(Properties, Diagrams) { expect_all(diagram_properties(kDefaultSeed)); }
TEST(Properties, Evaluator) { expect_all(evaluator_properties(kDefaultSeed)); }
TEST(Properties, BlowUp) { expect_all({blowup_property()}); }
TEST(Properties, Skein) { expect_all(skein_properties(kDefaultSeed)); }
TEST(Properties, LimitRank) { expect_all(limit_rank_properties(kDefaultSeed)); }

TEST(Properties, OtherSeed) {
  expect_all(evaluator_properties(7, 30));
  expect_all(limit_rank_properties(7));
}

TEST(Numerics, JacobiAndCharacteristicPolynomial) {
  const auto ev = symmetric_eigenvalues({{2, 1}, {1, 2}});
  EXPECT_NEAR(std::min(ev[0], ev[1]), 1.0, 1e-12);
  EXPECT_NEAR(std::max(ev[0], ev[1]), 3.0, 1e-12);
  EXPECT_EQ(float_nonzero_eigenvalue_count({{0, 1}, {0, 0}}), 0u);
  EXPECT_EQ(float_nonzero_eigenvalue_count({{1, 0}, {0, 0}}), 1u);
}
