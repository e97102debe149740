#pragma once

#include <optional>
#include <vector>

#include "bim/complex.hpp"
#include "bim/registry.hpp"

namespace bim {

/// Standard chromatic subdivision Ch.
///
/// A vertex is a pair (color, carrier) where the carrier is a face of `c`
/// holding a vertex of that color. A set of such vertices is a simplex iff the
/// colors are distinct, the carriers form a chain, and whenever the color of one
/// vertex occurs in another's carrier, its own carrier is contained there.
/// Facets are therefore indexed by ordered partitions of each base facet.
///
/// The corner (π(v), {v}) keeps vid v and v's label; other vertices get fresh
/// vids from `registry`, labelled "(c|{carrier vids})". Passing one registry to
/// several calls keeps the results in one vid space.
ChromaticComplex chromatic_subdivide(const ChromaticComplex& c, VertexRegistry& registry,
                                     const Limits& limits = {});
ChromaticComplex chromatic_subdivide(const ChromaticComplex& c, const Limits& limits = {});

/// Ch^rounds. Throws ResourceLimit before building a level above the cap.
ChromaticComplex iterate_subdivide(const ChromaticComplex& c, std::size_t rounds,
                                   const Limits& limits = {});

struct DegreeGrowthRow {
  std::size_t rounds = 0;
  std::size_t max_degree = 0;
  /// max_degree / previous row's max_degree.
  std::optional<double> ratio;
  /// (dim!)^(r-1) 2^dim dim, the growth template the ratios are compared with.
  double template_value = 0.0;
};

/// Exact max vertex degree of Ch^r Δ^dim for r = 1..r_max.
std::vector<DegreeGrowthRow> degree_growth_table(std::size_t dim, std::size_t r_max,
                                                 const Limits& limits = {});

}  // namespace bim
