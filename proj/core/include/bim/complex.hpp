#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "bim/error.hpp"

namespace bim {

using Vid = std::uint32_t;

/// Process identifier in [0, n).
struct Color {
  std::uint32_t value = 0;

  constexpr auto operator<=>(const Color&) const = default;
};

struct Vertex {
  Vid vid = 0;
  Color color;
  std::string label;

  bool operator==(const Vertex&) const = default;
};

/// Sorted, duplicate-free list of vids.
using Simplex = std::vector<Vid>;

Simplex make_simplex(std::vector<Vid> vids);
bool is_subset(const Simplex& small, const Simplex& big);
Simplex intersection(const Simplex& a, const Simplex& b);

/// counts[k] = number of k-dimensional faces.
using FVector = std::vector<std::size_t>;

/// Vertex bijection a -> b returned as a witness by `find_isomorphism`.
using VertexMap = std::map<Vid, Vid>;

/// Pure chromatic simplicial complex stored by its facets.
///
/// Immutable after construction. Vids are arbitrary (but unique) so that
/// subcomplexes keep the vid space of their ambient complex; builders in this
/// library assign them densely.
class ChromaticComplex {
 public:
  ChromaticComplex() = default;

  /// Validating constructor for caller-supplied facet lists. Throws
  /// DuplicateColorInFacet, FacetContainment or DanglingVertexReference.
  /// Vertices that no facet references are dropped.
  static ChromaticComplex build(std::size_t n, std::vector<Vertex> vertices,
                                std::vector<Simplex> facets);

  /// Complex generated by an arbitrary family of rainbow simplices: non-maximal
  /// members are discarded instead of rejected.
  static ChromaticComplex generated_by(std::size_t n, std::vector<Vertex> vertices,
                                       std::vector<Simplex> simplices);

  /// Number of process colors |Π|.
  std::size_t n() const { return n_; }
  bool empty() const { return facets_.empty(); }
  /// -1 for the empty complex.
  int dimension() const;

  std::span<const Vertex> vertices() const { return vertices_; }
  std::span<const Simplex> facets() const { return facets_; }
  std::size_t num_vertices() const { return vertices_.size(); }

  bool has_vertex(Vid v) const { return index_of(v).has_value(); }
  const Vertex& vertex(Vid v) const;
  Color color(Vid v) const { return vertex(v).color; }
  /// Vertices u with {u, v} a face, ascending.
  std::span<const Vid> neighbors(Vid v) const;
  std::size_t degree(Vid v) const { return neighbors(v).size(); }
  bool adjacent(Vid u, Vid v) const;
  /// Number of distinct colors carried by vertices.
  std::size_t colors_present() const;
  std::size_t max_degree() const;

  bool contains_face(const Simplex& s) const;
  /// Facets (as indices into facets()) that contain v.
  std::span<const std::uint32_t> facets_of(Vid v) const;

  /// All nonempty faces, sorted and deduplicated.
  std::vector<Simplex> faces() const;
  FVector f_vector() const;
  long long euler_characteristic() const;

  /// Subcomplex made of the facets containing s. Throws SimplexNotInComplex.
  ChromaticComplex star(const Simplex& s) const;
  ChromaticComplex star(Vid v) const { return star(Simplex{v}); }
  /// Faces not containing v whose join with v is a face. Throws VertexNotInComplex.
  ChromaticComplex link(Vid v) const;

  /// Subcomplex generated by the given faces of this complex.
  ChromaticComplex subcomplex(const std::vector<Simplex>& generators) const;
  /// True iff every facet of `sub` is a face of this complex with matching vertices.
  bool contains_subcomplex(const ChromaticComplex& sub) const;

  bool operator==(const ChromaticComplex& other) const;

 private:
  std::optional<std::size_t> index_of(Vid v) const;
  std::size_t require_index(Vid v) const;
  void index();

  std::size_t n_ = 0;
  std::vector<Vertex> vertices_;  // ascending vid
  std::vector<Simplex> facets_;   // ascending lexicographic
  std::vector<std::vector<Vid>> adjacency_;
  std::vector<std::vector<std::uint32_t>> incidence_;
};

/// Faces(a) ∩ Faces(b). Both must live in one vid space: a vid present in both
/// with different color or label raises IncompatibleVertexSpaces.
ChromaticComplex intersect(const ChromaticComplex& a, const ChromaticComplex& b);

/// Faces(a) ∪ Faces(b), same vid-space requirement as `intersect`.
ChromaticComplex unite(const ChromaticComplex& a, const ChromaticComplex& b);

/// Color-preserving bijection of vertices mapping Faces(a) onto Faces(b).
std::optional<VertexMap> find_isomorphism(const ChromaticComplex& a, const ChromaticComplex& b);
inline bool is_isomorphic(const ChromaticComplex& a, const ChromaticComplex& b) {
  return find_isomorphism(a, b).has_value();
}

/// Checks that `map` is a color-preserving vertex bijection carrying the facets
/// of a exactly onto the facets of b.
bool is_isomorphism(const ChromaticComplex& a, const ChromaticComplex& b, const VertexMap& map);

/// Δ^dim with colors 0..dim, vids 0..dim and labels "x0".."x<dim>".
ChromaticComplex standard_simplex(std::size_t dim);

}  // namespace bim
