#pragma once

#include <compare>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "bim/complex.hpp"
#include "bim/encoding.hpp"
#include "bim/protocol.hpp"
#include "bim/registry.hpp"

namespace bim {

/// A value read that could not be inverted, kept verbatim under the
/// permissive policy.
struct RawToken {
  Color source;
  std::uint32_t code = 0;
  std::size_t round = 0;

  auto operator<=>(const RawToken&) const = default;
};

struct SimProcessState {
  Color color;
  Vid input_vertex = 0;
  /// Decoded input vids, own input included.
  std::set<Vid> knowledge;
  std::set<RawToken> raw;

  auto operator<=>(const SimProcessState&) const = default;
};

/// One layer of b-bit registers, one per process, all ⊥ at start.
class MemoryLayer {
 public:
  explicit MemoryLayer(std::size_t n) : cells_(n), written_(n, false) {}

  /// Throws InvalidParameters on a second write to the same cell.
  void write(Color writer, EncodingValue value);
  EncodingValue read(Color cell) const { return cells_.at(cell.value); }

 private:
  std::vector<EncodingValue> cells_;
  std::vector<bool> written_;
};

enum class DecodePolicy {
  /// Two candidates raise AmbiguousDecode.
  Strict,
  /// Two candidates are kept as a RawToken instead of a vid.
  Permissive,
};

/// The unique neighbor of the reader's input vertex with color `source` and
/// code `value`. std::nullopt for ⊥ or when no neighbor matches. Throws
/// AmbiguousDecode when several match.
std::optional<Vid> decode(const SimProcessState& reader, Color source, EncodingValue value,
                          const EncodingFunction& w, const ChromaticComplex& c);

/// Runs one round of the bounded collect protocol: every process writes the
/// code of its input vertex and reads all cells in schedule order. A process
/// whose own code is ⊥ keeps its state.
void run_round(const ChromaticComplex& c, const Simplex& facet, const EncodingFunction& w,
               const Schedule& schedule, std::size_t round, std::vector<SimProcessState>& states,
               DecodePolicy policy = DecodePolicy::Strict);

/// Initial solo states of the processes of `facet`, in vid order.
std::vector<SimProcessState> initial_states(const ChromaticComplex& c, const Simplex& facet);

/// Full run, one IC schedule per encoding function.
GlobalView run_bounded(const ChromaticComplex& c, const Simplex& facet, const EncodingSequence& ws,
                       const std::vector<Schedule>& schedules,
                       DecodePolicy policy = DecodePolicy::Strict);

/// Vertex label of a final state: "{vids}" plus "+[color:code@round,...]" for
/// raw tokens.
std::string state_label(const SimProcessState& s);

/// All reachable final state vectors of the bounded protocol on `facet`.
/// Each round tries every collect outcome of the round; state vectors are
/// deduplicated between rounds.
std::set<std::vector<SimProcessState>> reachable_states(const ChromaticComplex& c,
                                                        const Simplex& facet,
                                                        const EncodingSequence& ws,
                                                        DecodePolicy policy = DecodePolicy::Strict,
                                                        const Limits& limits = {});

/// Protocol complex of the bounded protocol over `faces` (faces of c). States
/// that only saw themselves keep their input vid. Vids come from `registry`
/// so several calls can be intersected.
ChromaticComplex bounded_protocol_complex(const ChromaticComplex& c,
                                          const std::vector<Simplex>& faces,
                                          const EncodingSequence& ws, VertexRegistry& registry,
                                          DecodePolicy policy = DecodePolicy::Strict,
                                          const Limits& limits = {});

/// Over every facet of c.
ChromaticComplex bounded_protocol_complex(const ChromaticComplex& c, const EncodingSequence& ws,
                                          DecodePolicy policy = DecodePolicy::Strict,
                                          const Limits& limits = {});

struct CounterexampleReport {
  ChromaticComplex complex;
  EncodingSequence sequence;
  Simplex alpha;
  Simplex beta;
  Simplex shared;
  /// Bounded protocol complexes of α, β and α ∩ β, in one vid space.
  ChromaticComplex xi_alpha;
  ChromaticComplex xi_beta;
  ChromaticComplex xi_shared;
  /// A vertex of xi_alpha ∩ xi_beta missing from xi_shared.
  std::optional<Vertex> merged;
  bool intersection_preserved = true;
  EncodingSequence repaired;
  std::optional<Vertex> repaired_merged;
  bool repaired_intersection_preserved = false;
  bool repaired_isomorphic = false;
};

/// Two triangles α, β glued on an edge, every vertex coded 1: the private
/// vertices of α and β cannot be told apart by the shared ones. The repaired
/// variant gives the private vertices different codes.
CounterexampleReport shared_code_counterexample();

struct PipelineResult {
  ChromaticComplex complex;
  std::size_t total_rounds = 0;
  /// Budgeted sequence length of each iteration.
  std::vector<std::size_t> rounds_per_iteration;
  /// Lower bound of each iteration's input complex.
  std::vector<std::size_t> lower_bounds;
};

/// `iterations` times: greedy star, split to b bits, bounded protocol complex,
/// feeding each result into the next iteration.
PipelineResult iterate_pipeline(const ChromaticComplex& c, std::size_t iterations, unsigned bits,
                                const Limits& limits = {});

}  // namespace bim
