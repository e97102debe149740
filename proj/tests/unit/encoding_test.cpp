#include <gtest/gtest.h>

#include <random>

#include "bim/encoding.hpp"
#include "bim/generators.hpp"
#include "bim/subdivision.hpp"
#include "oracles.hpp"

using namespace bim;

namespace {

// gen_glued(2): a1=0, a2=1 (color 0), p1=2, p2=3.
EncodingFunction glued_codes(std::uint32_t a1, std::uint32_t a2) {
  return EncodingFunction({{0, a1}, {1, a2}, {2, 1}, {3, 1}});
}

// Distinguishability straight from the edge relation.
bool by_definition(const ChromaticComplex& c, Vid v, const EncodingFunction& w) {
  for (Vid u : c.neighbors(v)) {
    for (Vid x : c.neighbors(u)) {
      if (x != v && c.color(x) == c.color(v) && w(x) == w(v)) return false;
    }
  }
  return true;
}

}  // namespace

TEST(Encoding, VertexExamples) {
  const auto d2 = gen_simplex(2);
  const EncodingFunction ones({{0, 1}, {1, 1}, {2, 1}});
  for (Vid v = 0; v <= 2; ++v) EXPECT_TRUE(is_vertex_distinguishable(d2, v, ones));

  const auto g = gen_glued(2);
  EXPECT_FALSE(is_vertex_distinguishable(g, 0, glued_codes(1, 1)));
  EXPECT_TRUE(is_vertex_distinguishable(g, 0, glued_codes(1, 2)));
}

TEST(Encoding, BottomRules) {
  const auto g = gen_glued(2);
  const EncodingFunction none;
  // ⊥ on both private vertices: equal values under the verbatim rule.
  EXPECT_FALSE(is_vertex_distinguishable(g, 0, none));
  EXPECT_TRUE(is_vertex_distinguishable(g, 2, none));
  EXPECT_FALSE(is_vertex_distinguishable(g, 2, none, BottomRule::WrittenOnly));
  const EncodingFunction only_a1(std::map<Vid, std::uint32_t>{{0, 1}});
  EXPECT_TRUE(is_vertex_distinguishable(g, 0, only_a1));
  EXPECT_TRUE(is_vertex_distinguishable(g, 0, only_a1, BottomRule::WrittenOnly));
  EXPECT_FALSE(is_vertex_distinguishable(g, 1, only_a1, BottomRule::WrittenOnly));
}

TEST(Encoding, SubcomplexExamples) {
  const auto g = gen_glued(2);
  const auto alpha = g.subcomplex({g.facets()[0]});
  EXPECT_FALSE(is_subcomplex_distinguishable(g, alpha, glued_codes(1, 1)));
  EXPECT_TRUE(is_subcomplex_distinguishable(g, alpha, glued_codes(1, 2)));
  EXPECT_TRUE(is_subcomplex_distinguishable(g, ChromaticComplex{}, glued_codes(1, 1)));
  EXPECT_TRUE(is_simplex_distinguishable(g, {2, 3}, glued_codes(1, 1)));
  try {
    is_simplex_distinguishable(g, {0, 1}, glued_codes(1, 1));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::SimplexNotInComplex);
  }
  const auto other = gen_simplex(4);
  try {
    is_subcomplex_distinguishable(g, other, glued_codes(1, 1));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotASubcomplex);
  }
}

TEST(Encoding, DistinguishableSubcomplex) {
  const auto g = gen_glued(2);
  const auto d = distinguishable_subcomplex(g, glued_codes(1, 1));
  // Only the shared edge survives.
  EXPECT_EQ(d.facets().size(), 1u);
  EXPECT_EQ(d.facets()[0], (Simplex{2, 3}));
  EXPECT_TRUE(distinguishable_subcomplex(g, EncodingSequence{}).empty());
  EXPECT_EQ(distinguishable_subcomplex(g, EncodingSequence{glued_codes(1, 2)}), g);
}

TEST(Encoding, MatchesDefinitionOnRandomComplexes) {
  std::mt19937 rng(17);
  for (const auto& c : oracle::random_pool(8, 25, 3, 6)) {
    EncodingFunction w;
    for (const auto& v : c.vertices()) {
      if (rng() % 4) w.set(v.vid, rng() % 3 + 1);
    }
    for (const auto& v : c.vertices()) {
      EXPECT_EQ(is_vertex_distinguishable(c, v.vid, w), by_definition(c, v.vid, w));
    }
    // Monotone under taking faces.
    const auto d = distinguishable_subcomplex(c, w);
    for (const auto& f : d.faces()) EXPECT_TRUE(is_simplex_distinguishable(c, f, w));
    // Injective renaming of codes changes nothing.
    EncodingFunction renamed;
    for (const auto& [v, code] : w.codes()) renamed.set(v, code * 7 + 100);
    EXPECT_EQ(distinguishable_vertices(c, w), distinguishable_vertices(c, renamed));
    // Adding a function never shrinks the union.
    const auto both = distinguishable_subcomplex(c, EncodingSequence{w, EncodingFunction{}});
    EXPECT_TRUE(both.contains_subcomplex(d));
  }
}

TEST(Encoding, Budgets) {
  EXPECT_EQ(code_budget(1), 1u);
  EXPECT_EQ(code_budget(3), 7u);
  EXPECT_THROW(code_budget(0), Error);
  EXPECT_THROW(code_budget(32), Error);
  EXPECT_EQ(lower_bound_rounds(gen_simplex(2), 1), 1u);
  EXPECT_EQ(lower_bound_rounds(gen_glued(2), 1), 1u);
  const auto ch = chromatic_subdivide(gen_simplex(2));
  EXPECT_EQ(lower_bound_rounds(ch, 1), (ch.max_degree() + 2) / 3);
  EXPECT_THROW(lower_bound_rounds(ChromaticComplex{}, 1), Error);
}

TEST(Encoding, ImageIgnoresBottom) {
  EncodingFunction w({{0, 3}, {1, 3}, {2, 5}});
  w.set(2, std::nullopt);
  EXPECT_EQ(w.image(), (std::set<std::uint32_t>{3}));
  EXPECT_FALSE(w(2).has_value());
}
