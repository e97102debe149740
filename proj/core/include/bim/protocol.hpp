#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "bim/complex.hpp"
#include "bim/registry.hpp"

namespace bim {

/// Read-write pattern of one shared-memory layer.
enum class Pattern {
  IC,   ///< collect: n single-register reads in any order
  IAS,  ///< atomic snapshot of the whole layer
  IIS,  ///< immediate snapshot: write and snapshot as one concurrent block
};

std::string_view to_string(Pattern p);
std::optional<Pattern> parse_pattern(std::string_view text);

/// Outcome of one round on one input simplex: what each process observed.
struct GlobalView {
  /// color -> observed input vids (sorted, own vid included)
  std::map<Color, Simplex> views;

  auto operator<=>(const GlobalView&) const = default;
};
using ViewSet = std::set<GlobalView>;

/// "{v1,v2,...}", the label a protocol vertex carries for its view.
std::string view_label(const Simplex& view);

enum class EventKind { Write, Read, Snapshot, ImmediateSnapshot };

struct Event {
  EventKind kind = EventKind::Write;
  Color process;
  /// Register read by a Read event.
  Color target;
  /// Concurrency class of an ImmediateSnapshot event.
  std::uint32_t block = 0;

  bool operator==(const Event&) const = default;
};

/// Total order of atomic events of one round.
struct Schedule {
  std::vector<Event> events;
};

/// Runs `schedule` against a fresh layer for the processes of `simplex`.
/// Throws InvalidParameters if it violates program order.
GlobalView evaluate_schedule(const ChromaticComplex& c, const Simplex& simplex, Pattern p,
                             const Schedule& schedule);

/// All global views of one round, from the closed-form characterizations:
/// IIS = ordered partitions, IAS = self-inclusive views totally ordered by
/// inclusion, IC = self-inclusive views whose misses digraph is acyclic.
/// Throws NotAFacet if `simplex` is not a face of c.
ViewSet round_views(const ChromaticComplex& c, const Simplex& simplex, Pattern p);

/// Same set, by brute force over every event interleaving that respects
/// program order. IC is capped at 3 processes, IAS/IIS at 4 (ResourceLimit).
ViewSet schedule_oracle(const ChromaticComplex& c, const Simplex& simplex, Pattern p);

/// A schedule of pattern `p` whose evaluation is `view`.
Schedule witness_schedule(const ChromaticComplex& c, const Simplex& simplex, Pattern p,
                          const GlobalView& view);

/// Builds Ξ^r_FI_P. Vertices are (color, view over the previous level's vids);
/// a process that saw only itself keeps its input vid. One builder can be
/// applied to several subcomplexes of the same input and the results share a
/// vid space (required for intersecting them).
class ProtocolBuilder {
 public:
  ProtocolBuilder(Pattern pattern, Vid first_fresh, Limits limits = {});
  /// Builder whose fresh vids start above every vid of `ambient`.
  ProtocolBuilder(Pattern pattern, const ChromaticComplex& ambient, Limits limits = {});

  ChromaticComplex apply(const ChromaticComplex& input, std::size_t rounds = 1);
  Pattern pattern() const { return pattern_; }

 private:
  ChromaticComplex one_round(const ChromaticComplex& input, std::size_t level);

  Pattern pattern_;
  VertexRegistry root_;
  std::vector<VertexRegistry> levels_;  // one per round, sharing root_'s counter
  Limits limits_;
};

ChromaticComplex protocol_complex(const ChromaticComplex& c, Pattern p, std::size_t rounds,
                                  const Limits& limits = {});

/// No edge of Ξ(c) joins two vertices that saw only their own input.
bool check_no_input_edges(const ChromaticComplex& c, Pattern p);

/// Ξ(A) ∩ Ξ(B) == Ξ(A ∩ B) for `trials` seeded random subcomplex pairs.
bool check_intersection_preserving(const ChromaticComplex& c, Pattern p, std::size_t trials,
                                   std::uint64_t seed, std::size_t rounds = 1);

/// Pair-level form of the same check.
bool intersection_preserved(const ChromaticComplex& ambient, const ChromaticComplex& a,
                            const ChromaticComplex& b, Pattern p, std::size_t rounds = 1);

}  // namespace bim
