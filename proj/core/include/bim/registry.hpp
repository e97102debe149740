#pragma once

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "bim/complex.hpp"

namespace bim {

/// Assigns vids to (color, key) states so complexes built separately share one
/// vid space and can be intersected or compared face by face.
///
/// `pin` fixes a vid up front (used to keep original input vertices under
/// their old vid); everything else gets fresh vids counting up from `first_fresh`.
class VertexRegistry {
 public:
  explicit VertexRegistry(Vid first_fresh = 0) : next_(std::make_shared<Vid>(first_fresh)) {}

  /// Empty registry drawing fresh vids from the same counter as this one.
  VertexRegistry sibling() const {
    VertexRegistry r;
    r.next_ = next_;
    return r;
  }

  void pin(Color color, const std::string& key, std::string label, Vid vid);
  Vid intern(Color color, const std::string& key, std::string label);
  Vid intern(Color color, const std::string& label) { return intern(color, label, label); }

  const Vertex& vertex(Vid vid) const { return by_vid_.at(vid); }
  Vid next_fresh() const { return *next_; }

  /// Complex generated by `simplices` (vids issued by this registry).
  ChromaticComplex complex(std::size_t n, std::vector<Simplex> simplices) const;

 private:
  std::map<std::pair<std::uint32_t, std::string>, Vid> ids_;
  std::map<Vid, Vertex> by_vid_;
  std::shared_ptr<Vid> next_;
};

}  // namespace bim
