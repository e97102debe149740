#include <gtest/gtest.h>

#include "bim/bounded_sim.hpp"
#include "bim/generators.hpp"
#include "bim/greedy_star.hpp"
#include "bim/protocol.hpp"
#include "oracles.hpp"

using namespace bim;

namespace {

Schedule sequential(std::size_t n) {
  Schedule s;
  for (std::uint32_t p = 0; p < n; ++p) {
    s.events.push_back({EventKind::Write, Color{p}, Color{p}, 0});
    for (std::uint32_t q = 0; q < n; ++q) s.events.push_back({EventKind::Read, Color{p}, Color{q}, 0});
  }
  return s;
}

Schedule writes_first(std::size_t n) {
  Schedule s;
  for (std::uint32_t p = 0; p < n; ++p) s.events.push_back({EventKind::Write, Color{p}, Color{p}, 0});
  for (std::uint32_t p = 0; p < n; ++p) {
    for (std::uint32_t q = 0; q < n; ++q) s.events.push_back({EventKind::Read, Color{p}, Color{q}, 0});
  }
  return s;
}

SimProcessState reader_at(const ChromaticComplex& c, Vid v) {
  return {c.color(v), v, {v}, {}};
}

}  // namespace

TEST(BoundedSim, DecodeExamples) {
  const auto g = gen_glued(2);  // a1=0, a2=1, p1=2, p2=3
  const EncodingFunction distinct({{0, 1}, {1, 2}, {2, 1}, {3, 1}});
  const auto p1 = reader_at(g, 2);
  EXPECT_EQ(decode(p1, Color{0}, 1, distinct, g), std::optional<Vid>{0});
  EXPECT_EQ(decode(p1, Color{0}, 2, distinct, g), std::optional<Vid>{1});
  EXPECT_FALSE(decode(p1, Color{0}, std::nullopt, distinct, g).has_value());
  EXPECT_FALSE(decode(p1, Color{0}, 9, distinct, g).has_value());

  const EncodingFunction shared({{0, 1}, {1, 1}, {2, 1}, {3, 1}});
  try {
    decode(p1, Color{0}, 1, shared, g);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::AmbiguousDecode);
  }
  // a1 only sees one vertex of color 1.
  EXPECT_EQ(decode(reader_at(g, 0), Color{1}, 1, shared, g), std::optional<Vid>{2});
}

TEST(BoundedSim, MemoryCellsAreWriteOnce) {
  MemoryLayer layer(2);
  EXPECT_FALSE(layer.read(Color{0}).has_value());
  layer.write(Color{0}, 3);
  EXPECT_EQ(layer.read(Color{0}), EncodingValue{3});
  EXPECT_THROW(layer.write(Color{0}, 4), Error);
}

TEST(BoundedSim, ScheduleExamples) {
  const auto d2 = gen_simplex(2);
  const auto ws = greedy_star(d2).sequence;
  const GlobalView seq = run_bounded(d2, {0, 1, 2}, ws, {sequential(3)});
  EXPECT_EQ(seq.views.at(Color{0}), (Simplex{0}));
  EXPECT_EQ(seq.views.at(Color{1}), (Simplex{0, 1}));
  EXPECT_EQ(seq.views.at(Color{2}), (Simplex{0, 1, 2}));

  const auto d1 = gen_simplex(1);
  const GlobalView both = run_bounded(d1, {0, 1}, greedy_star(d1).sequence, {writes_first(2)});
  EXPECT_EQ(both.views.at(Color{0}), (Simplex{0, 1}));
  EXPECT_EQ(both.views.at(Color{1}), (Simplex{0, 1}));
}

TEST(BoundedSim, UncodedProcessKeepsItsState) {
  const auto d1 = gen_simplex(1);
  const EncodingFunction only0(std::map<Vid, std::uint32_t>{{0, 1}});
  const GlobalView g = run_bounded(d1, {0, 1}, {only0}, {writes_first(2)});
  EXPECT_EQ(g.views.at(Color{0}), (Simplex{0}));
  EXPECT_EQ(g.views.at(Color{1}), (Simplex{1}));
}

TEST(BoundedSim, ReachableStatesMatchCollectViews) {
  const auto d2 = gen_simplex(2);
  const auto ws = greedy_star(d2).sequence;
  EXPECT_EQ(reachable_states(d2, {0, 1, 2}, ws).size(), round_views(d2, {0, 1, 2}, Pattern::IC).size());
}

TEST(BoundedSim, ComplexExamples) {
  for (const auto& c : {gen_simplex(1), gen_simplex(2), gen_glued(2)}) {
    const auto target = protocol_complex(c, Pattern::IC, 1);
    for (unsigned b = 1; b <= 3; ++b) {
      const auto ws = split_to_budget(greedy_star(c).sequence, c, b);
      const auto xi = bounded_protocol_complex(c, ws);
      EXPECT_EQ(xi, target) << "b=" << b;
    }
  }
}

TEST(BoundedSim, RandomComplexesMatchCollect) {
  for (const auto& c : oracle::random_pool(51, 6, 3, 4)) {
    const auto ws = split_to_budget(greedy_star(c).sequence, c, 1);
    EXPECT_TRUE(is_isomorphic(bounded_protocol_complex(c, ws), protocol_complex(c, Pattern::IC, 1)));
  }
}

TEST(BoundedSim, StateLabels) {
  SimProcessState s{Color{1}, 2, {2}, {{Color{0}, 1, 0}}};
  EXPECT_EQ(state_label(s), "{2}+[0:1@0]");
  s.raw.clear();
  s.knowledge = {0, 2};
  EXPECT_EQ(state_label(s), "{0,2}");
}

TEST(BoundedSim, Counterexample) {
  const auto r = shared_code_counterexample();
  EXPECT_EQ(r.complex.num_vertices(), 4u);
  EXPECT_EQ(r.complex.facets().size(), 2u);
  ASSERT_TRUE(r.merged.has_value());
  EXPECT_NE(r.merged->label.find('+'), std::string::npos);
  EXPECT_FALSE(r.intersection_preserved);
  EXPECT_FALSE(r.repaired_merged.has_value());
  EXPECT_TRUE(r.repaired_intersection_preserved);
  EXPECT_TRUE(r.repaired_isomorphic);
  EXPECT_THROW(bounded_protocol_complex(r.complex, r.sequence), Error);
}

TEST(BoundedSim, Pipeline) {
  const auto d2 = gen_simplex(2);
  const auto one = iterate_pipeline(d2, 1, 8);
  EXPECT_TRUE(is_isomorphic(one.complex, protocol_complex(d2, Pattern::IC, 1)));
  EXPECT_EQ(one.total_rounds, 1u);

  const auto d1 = gen_simplex(1);
  const auto two = iterate_pipeline(d1, 2, 1);
  EXPECT_TRUE(is_isomorphic(two.complex, protocol_complex(d1, Pattern::IC, 2)));
  ASSERT_EQ(two.rounds_per_iteration.size(), 2u);
  EXPECT_EQ(two.total_rounds, two.rounds_per_iteration[0] + two.rounds_per_iteration[1]);
  for (std::size_t i = 0; i < 2; ++i) EXPECT_GE(two.rounds_per_iteration[i], two.lower_bounds[i]);
}
