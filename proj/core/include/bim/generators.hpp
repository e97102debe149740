#pragma once

#include <cstdint>

#include "bim/complex.hpp"

namespace bim {

/// Δ^dim.
ChromaticComplex gen_simplex(std::size_t dim);

/// k facets of dimension `dim` sharing one (dim-1)-face. The private vertices
/// a1..ak have color 0 and vids 0..k-1; the shared ones p1..p<dim> follow with
/// colors 1..dim. `gen_glued(2)` is the two-triangle complex.
ChromaticComplex gen_glued(std::size_t k, std::size_t dim = 2);

/// m facets in a row: facet i = {v_i, ..., v_{i+dim}}, v_j colored j mod (dim+1).
ChromaticComplex gen_path(std::size_t m, std::size_t dim = 2);

/// Reproducible random pure complex on n colors with `facets` facets of
/// dimension n-1. Each new facet keeps between 1 and n-1 vertices of an
/// existing facet and fills the other colors with fresh vertices or
/// same-colored vertices already present. Uses std::mt19937_64 and modular
/// reduction only, so the output is identical across platforms.
ChromaticComplex gen_random(std::uint64_t seed, std::size_t n, std::size_t facets);

}  // namespace bim
