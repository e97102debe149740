#pragma once

#include <vector>

#include "bim/complex.hpp"
#include "bim/encoding.hpp"

namespace bim {

/// How a selected star's vertices pick their codes.
enum class CodeRule {
  /// Smallest code not held by a same-colored vertex already coded this round
  /// at distance <= 2. Keeps every coded vertex distinguishable even when two
  /// stars of the same round sit two hops apart.
  Distance2,
  /// Codes distinct only among same-colored vertices of the star itself.
  /// Kept for comparison; it can leave faces uncovered.
  WithinStar,
};

struct StarRound {
  /// Selected star centers, in selection order.
  std::vector<Vid> centers;
  /// Union of the selected stars.
  ChromaticComplex covered;
  EncodingFunction encoding;
  /// Set when the candidate pool was rebuilt from uncovered facets first.
  bool refilled = false;
};

struct StarCoverTrace {
  std::vector<StarRound> rounds;
  std::size_t refills = 0;
};

struct GreedyStarResult {
  EncodingSequence sequence;
  StarCoverTrace trace;
};

/// Greedy star cover. Candidates are scanned in ascending vid; a star is
/// taken when no vertex of it has a star meeting what this round already
/// covers. Covered centers and their star vertices leave the candidate pool.
/// If the pool runs dry (or holds only vertices whose stars are already
/// covered) while facets remain, it is rebuilt from the uncovered facets.
/// Throws InvalidParameters on an empty complex.
GreedyStarResult greedy_star(const ChromaticComplex& c, CodeRule rule = CodeRule::Distance2);

/// Rewrites each function so it uses at most 2^b - 1 codes.
///
/// Functions already within budget are kept. Otherwise the codes are cut into
/// contiguous groups remapped onto 1..2^b-1; that split is kept if every face
/// fully written and distinguishable under the original stays so under some
/// part. Failing that, those faces are packed facet by facet into as many
/// functions as needed, each facet written whole and kept distinguishable.
std::vector<EncodingSequence> split_each_to_budget(const EncodingSequence& ws,
                                                   const ChromaticComplex& c, unsigned bits);
EncodingSequence split_to_budget(const EncodingSequence& ws, const ChromaticComplex& c,
                                 unsigned bits);

/// 4 * lower_bound_rounds(c, bits).
std::size_t upper_bound_rounds(const ChromaticComplex& c, unsigned bits);

/// distinguishable_subcomplex(c, ws) == c.
bool verify_cover(const ChromaticComplex& c, const EncodingSequence& ws,
                  BottomRule rule = BottomRule::Verbatim);

}  // namespace bim
