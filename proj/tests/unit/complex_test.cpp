#include <gtest/gtest.h>

#include "bim/complex.hpp"
#include "bim/generators.hpp"
#include "oracles.hpp"

using namespace bim;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no bim::Error thrown";
  return ErrorKind::ParseError;
}

Vid by_label(const ChromaticComplex& c, const std::string& label) {
  for (const auto& v : c.vertices()) {
    if (v.label == label) return v.vid;
  }
  throw std::runtime_error("no vertex " + label);
}

}  // namespace

TEST(Complex, TwoTrianglesHaveElevenFaces) {
  const auto c = gen_glued(2);
  EXPECT_EQ(c.faces().size(), 11u);
  EXPECT_EQ(c.f_vector(), (FVector{4, 5, 2}));
  EXPECT_EQ(c.faces().size(), oracle::all_faces(c).size());
  EXPECT_EQ(c.dimension(), 2);
}

TEST(Complex, LinkOfSharedVertexIsAPath) {
  const auto c = gen_glued(2);
  const Vid p1 = by_label(c, "p1");
  const auto link = c.link(p1);
  const Vid a1 = by_label(c, "a1"), a2 = by_label(c, "a2"), p2 = by_label(c, "p2");
  EXPECT_EQ(link.facets().size(), 2u);
  EXPECT_TRUE(link.contains_face(make_simplex({a1, p2})));
  EXPECT_TRUE(link.contains_face(make_simplex({a2, p2})));
  EXPECT_FALSE(link.contains_face(make_simplex({a1, a2})));
  EXPECT_EQ(link.f_vector(), (FVector{3, 2}));
}

TEST(Complex, StarAndLinkAgree) {
  for (const auto& c : oracle::random_pool(3, 20, 3, 6)) {
    for (const auto& v : c.vertices()) {
      const auto star = c.star(v.vid);
      const auto link = c.link(v.vid);
      // Every link face joined with v is a star face and vice versa.
      for (const auto& f : link.faces()) {
        Simplex j = f;
        j.push_back(v.vid);
        EXPECT_TRUE(star.contains_face(make_simplex(j)));
      }
      for (const auto& f : star.facets()) {
        Simplex rest;
        for (Vid u : f) {
          if (u != v.vid) rest.push_back(u);
        }
        if (!rest.empty()) EXPECT_TRUE(link.contains_face(rest));
      }
      EXPECT_EQ(c.degree(v.vid), link.num_vertices());
    }
  }
}

TEST(Complex, FVectorAndEulerMatchOracle) {
  for (const auto& c : oracle::random_pool(11, 30, 3, 6)) {
    const auto f = oracle::f_vector(c);
    EXPECT_EQ(c.f_vector(), f);
    long long chi = 0;
    for (std::size_t k = 0; k < f.size(); ++k) chi += (k % 2 ? -1 : 1) * static_cast<long long>(f[k]);
    EXPECT_EQ(c.euler_characteristic(), chi);
  }
  EXPECT_EQ(gen_simplex(3).euler_characteristic(), 1);
}

TEST(Complex, ValidationErrors) {
  std::vector<Vertex> vs{{0, Color{0}, "a"}, {1, Color{0}, "b"}, {2, Color{1}, "c"}};
  EXPECT_EQ(kind_of([&] { ChromaticComplex::build(2, vs, {{0, 1}}); }),
            ErrorKind::DuplicateColorInFacet);
  EXPECT_EQ(kind_of([&] { ChromaticComplex::build(2, vs, {{0, 2}, {2}}); }),
            ErrorKind::FacetContainment);
  EXPECT_EQ(kind_of([&] { ChromaticComplex::build(2, vs, {{0, 7}}); }),
            ErrorKind::DanglingVertexReference);
  const auto c = ChromaticComplex::build(2, vs, {{0, 2}, {1, 2}});
  EXPECT_EQ(kind_of([&] { c.star(Simplex{0, 1}); }), ErrorKind::SimplexNotInComplex);
  EXPECT_EQ(kind_of([&] { c.link(42); }), ErrorKind::VertexNotInComplex);
}

TEST(Complex, GeneratedByDropsNonMaximal) {
  std::vector<Vertex> vs{{0, Color{0}, "a"}, {1, Color{1}, "b"}};
  const auto c = ChromaticComplex::generated_by(2, vs, {{0}, {0, 1}, {1}});
  EXPECT_EQ(c.facets().size(), 1u);
}

TEST(Complex, IntersectAndUnite) {
  const auto c = gen_glued(2);
  const auto a = c.subcomplex({c.facets()[0]});
  const auto b = c.subcomplex({c.facets()[1]});
  const auto meet = intersect(a, b);
  EXPECT_EQ(meet.facets().size(), 1u);
  EXPECT_EQ(meet.dimension(), 1);
  EXPECT_EQ(unite(a, b), c);
  EXPECT_TRUE(c.contains_subcomplex(meet));

  std::vector<Vertex> other{{0, Color{2}, "a1"}};
  const auto clash = ChromaticComplex::build(3, other, {{0}});
  EXPECT_EQ(kind_of([&] { intersect(a, clash); }), ErrorKind::IncompatibleVertexSpaces);
}

TEST(Complex, IsomorphismMatchesBruteForce) {
  const auto pool = oracle::random_pool(5, 40, 3, 4);
  std::size_t positives = 0;
  for (std::size_t i = 0; i < pool.size(); ++i) {
    for (std::size_t j = i; j < pool.size(); ++j) {
      if (pool[i].num_vertices() > 8 || pool[j].num_vertices() > 8) continue;
      const auto witness = find_isomorphism(pool[i], pool[j]);
      EXPECT_EQ(witness.has_value(), oracle::isomorphic(pool[i], pool[j])) << i << "," << j;
      if (witness) {
        EXPECT_TRUE(is_isomorphism(pool[i], pool[j], *witness));
        ++positives;
      }
    }
  }
  EXPECT_GT(positives, pool.size() / 2);
}

TEST(Complex, IsomorphismIgnoresVidsButNotColors) {
  const auto c = gen_path(3);
  std::vector<Vertex> shifted;
  for (const auto& v : c.vertices()) shifted.push_back({v.vid + 100, v.color, v.label});
  std::vector<Simplex> fs;
  for (const auto& f : c.facets()) {
    Simplex g;
    for (Vid v : f) g.push_back(v + 100);
    fs.push_back(g);
  }
  EXPECT_TRUE(is_isomorphic(c, ChromaticComplex::build(3, shifted, fs)));
  for (auto& v : shifted) v.color = Color{(v.color.value + 1) % 3};
  const auto recolored = ChromaticComplex::build(3, shifted, fs);
  EXPECT_EQ(is_isomorphic(c, recolored), oracle::isomorphic(c, recolored));
}
