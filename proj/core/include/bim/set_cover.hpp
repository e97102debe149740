#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bim/complex.hpp"
#include "bim/encoding.hpp"

namespace bim {

struct SetCoverInstance {
  std::vector<std::uint32_t> universe;
  std::vector<std::vector<std::uint32_t>> subsets;
};

/// Throws InvalidParameters on an empty subset, a repeated universe element
/// or a subset element outside the universe.
void validate(const SetCoverInstance& inst);

/// Union of the subsets equals the universe.
bool covers_universe(const SetCoverInstance& inst);

struct ReductionResult {
  ChromaticComplex complex;
  /// Facet vids of each universe element, in universe order.
  std::vector<Simplex> element_facets;
  /// One line per construction choice.
  std::vector<std::string> log;
};

/// One facet of dimension |U| per element. Two elements that lie together in
/// no subset get one shared vertex, so their facets can never be written in
/// the same ⊥/1 round. Shared vertices are colored greedily so that each
/// facet stays rainbow; the remaining slots are private vertices.
ReductionResult set_cover_reduce_explained(const SetCoverInstance& inst);
ChromaticComplex set_cover_reduce(const SetCoverInstance& inst);

struct ExactMinResult {
  std::size_t length = 0;
  EncodingSequence sequence;
};

/// Shortest sequence of ⊥/1 functions under which every facet of c is written
/// whole and distinguishable in some round. Exhaustive over facet subsets;
/// throws ResourceLimit above 12 vertices or 20 facets.
ExactMinResult exact_min_sequence(const ChromaticComplex& c);

}  // namespace bim
