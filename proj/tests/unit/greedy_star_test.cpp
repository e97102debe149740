#include <gtest/gtest.h>

#include "bim/generators.hpp"
#include "bim/greedy_star.hpp"
#include "oracles.hpp"

using namespace bim;

TEST(GreedyStar, SmallExamples) {
  const auto d2 = greedy_star(gen_simplex(2));
  EXPECT_EQ(d2.sequence.size(), 1u);
  EXPECT_EQ(d2.trace.rounds[0].centers, (std::vector<Vid>{0}));

  const auto d0 = greedy_star(gen_simplex(0));
  ASSERT_EQ(d0.sequence.size(), 1u);
  EXPECT_EQ(d0.sequence[0].codes().size(), 1u);

  const auto g = greedy_star(gen_glued(2));
  ASSERT_EQ(g.sequence.size(), 2u);
  EXPECT_EQ(g.trace.rounds[0].centers, (std::vector<Vid>{0}));
  EXPECT_EQ(g.trace.rounds[1].centers, (std::vector<Vid>{1}));
  EXPECT_THROW(greedy_star(ChromaticComplex{}), Error);
}

TEST(GreedyStar, CoversAndKeepsStarsDistinguishable) {
  for (const auto& c : oracle::random_pool(31, 40, 3, 6)) {
    const auto gs = greedy_star(c);
    EXPECT_TRUE(verify_cover(c, gs.sequence));
    EXPECT_TRUE(verify_cover(c, gs.sequence, BottomRule::WrittenOnly));
    ChromaticComplex covered;
    for (const auto& round : gs.trace.rounds) {
      EXPECT_TRUE(is_subcomplex_distinguishable(c, round.covered, round.encoding,
                                                BottomRule::WrittenOnly));
      covered = covered.empty() ? round.covered : unite(covered, round.covered);
    }
    EXPECT_EQ(covered, c);
  }
}

TEST(GreedyStar, Deterministic) {
  const auto c = gen_random(4, 3, 6);
  EXPECT_EQ(greedy_star(c).sequence, greedy_star(c).sequence);
}

TEST(GreedyStar, PerStarCodesCanMissFaces) {
  // Two stars of one round sit two hops apart and reuse a code.
  const auto c = gen_random(2, 3, 8);
  EXPECT_FALSE(verify_cover(c, greedy_star(c, CodeRule::WithinStar).sequence));
  EXPECT_TRUE(verify_cover(c, greedy_star(c).sequence));
  for (std::size_t m = 1; m <= 12; ++m) {
    const auto p = gen_path(m);
    EXPECT_TRUE(verify_cover(p, greedy_star(p).sequence));
  }
}

TEST(GreedyStar, SplitKeepsFunctionsWithinBudget) {
  const auto d3 = gen_simplex(3);
  const EncodingFunction four({{0, 1}, {1, 2}, {2, 3}, {3, 4}});
  EXPECT_EQ(split_to_budget({four}, d3, 3), (EncodingSequence{four}));
  const auto tight = split_to_budget({four}, d3, 1);
  EXPECT_LE(tight.size(), 4u);
  for (const auto& w : tight) EXPECT_LE(w.image_size(), 1u);
  EXPECT_TRUE(verify_cover(d3, tight, BottomRule::WrittenOnly));

  // Five edges on one hub, one code per spoke: two functions at three codes each.
  const auto fan = gen_glued(5, 1);
  const EncodingFunction spokes({{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 1}});
  ASSERT_TRUE(verify_cover(fan, {spokes}, BottomRule::WrittenOnly));
  const auto parts = split_to_budget({spokes}, fan, 2);
  EXPECT_EQ(parts.size(), 2u);
  for (const auto& w : parts) EXPECT_LE(w.image_size(), 3u);
  EXPECT_TRUE(verify_cover(fan, parts, BottomRule::WrittenOnly));
}

TEST(GreedyStar, SplitPreservesCoverOnRandomComplexes) {
  for (const auto& c : oracle::random_pool(41, 30, 3, 6)) {
    const auto gs = greedy_star(c);
    for (unsigned b = 1; b <= 3; ++b) {
      const auto ws = split_to_budget(gs.sequence, c, b);
      for (const auto& w : ws) EXPECT_LE(w.image_size(), code_budget(b));
      EXPECT_TRUE(verify_cover(c, ws, BottomRule::WrittenOnly));
      EXPECT_GE(ws.size(), lower_bound_rounds(c, b));
    }
  }
}

TEST(GreedyStar, BoundsFormula) {
  EXPECT_EQ(upper_bound_rounds(gen_simplex(2), 1), 4u);
  EXPECT_EQ(upper_bound_rounds(gen_glued(2), 1), 4u);
  const auto c = gen_random(9, 3, 6);
  for (unsigned b = 1; b <= 4; ++b) EXPECT_EQ(upper_bound_rounds(c, b), 4 * lower_bound_rounds(c, b));
}

TEST(GreedyStar, VerifyCoverEdgeCases) {
  const auto d2 = gen_simplex(2);
  EXPECT_FALSE(verify_cover(d2, {}));
  EXPECT_TRUE(verify_cover(d2, {EncodingFunction({{0, 1}, {1, 1}, {2, 1}})}));
}
