#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "bim/complex.hpp"

namespace bim {

/// A register value; std::nullopt is ⊥ (unwritten).
using EncodingValue = std::optional<std::uint32_t>;

/// Partial map vid -> code. Vertices without an entry are ⊥.
class EncodingFunction {
 public:
  EncodingFunction() = default;
  explicit EncodingFunction(std::map<Vid, std::uint32_t> codes) : codes_(std::move(codes)) {}

  EncodingValue operator()(Vid v) const {
    auto it = codes_.find(v);
    if (it == codes_.end()) return std::nullopt;
    return it->second;
  }
  void set(Vid v, EncodingValue value) {
    if (value) {
      codes_[v] = *value;
    } else {
      codes_.erase(v);
    }
  }

  const std::map<Vid, std::uint32_t>& codes() const { return codes_; }
  std::set<std::uint32_t> image() const;
  /// Number of distinct integer codes (⊥ excluded).
  std::size_t image_size() const { return image().size(); }

  bool operator==(const EncodingFunction&) const = default;

 private:
  std::map<Vid, std::uint32_t> codes_;
};

using EncodingSequence = std::vector<EncodingFunction>;

/// How ⊥ takes part in distinguishability.
enum class BottomRule {
  /// ⊥ is a value like any other and ⊥ == ⊥.
  Verbatim,
  /// A ⊥ vertex is never distinguishable: nothing was written for it.
  WrittenOnly,
};

/// No neighbor u of v has another neighbor x != v with the color and code of v.
bool is_vertex_distinguishable(const ChromaticComplex& c, Vid v, const EncodingFunction& w,
                               BottomRule rule = BottomRule::Verbatim);

/// Every vertex of `s` is distinguishable. Throws SimplexNotInComplex.
bool is_simplex_distinguishable(const ChromaticComplex& c, const Simplex& s,
                                const EncodingFunction& w, BottomRule rule = BottomRule::Verbatim);

/// Every vertex of `sub` is distinguishable in c. Throws NotASubcomplex.
bool is_subcomplex_distinguishable(const ChromaticComplex& c, const ChromaticComplex& sub,
                                   const EncodingFunction& w,
                                   BottomRule rule = BottomRule::Verbatim);

/// Vids of c distinguishable under w, ascending.
std::vector<Vid> distinguishable_vertices(const ChromaticComplex& c, const EncodingFunction& w,
                                          BottomRule rule = BottomRule::Verbatim);

/// Faces of c all of whose vertices are distinguishable under w.
ChromaticComplex distinguishable_subcomplex(const ChromaticComplex& c, const EncodingFunction& w,
                                            BottomRule rule = BottomRule::Verbatim);

/// Union over the sequence.
ChromaticComplex distinguishable_subcomplex(const ChromaticComplex& c, const EncodingSequence& ws,
                                            BottomRule rule = BottomRule::Verbatim);

/// 2^b - 1 codes fit in a b-bit register next to ⊥. Throws InvalidParameters
/// unless 1 <= b <= 31.
std::uint32_t code_budget(unsigned bits);

/// ⌈maxdeg / (n (2^b - 1))⌉ with n the number of colors present in c.
/// Throws InvalidParameters on an empty complex.
std::size_t lower_bound_rounds(const ChromaticComplex& c, unsigned bits);

}  // namespace bim
