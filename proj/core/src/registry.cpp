#include "bim/registry.hpp"

#include <set>

namespace bim {

void VertexRegistry::pin(Color color, const std::string& key, std::string label, Vid vid) {
  auto [it, inserted] = ids_.emplace(std::make_pair(color.value, key), vid);
  if (!inserted && it->second != vid) {
    throw Error(ErrorKind::IncompatibleVertexSpaces, "state " + key + " already has another vid");
  }
  auto existing = by_vid_.find(vid);
  if (existing != by_vid_.end() && existing->second.color != color) {
    throw Error(ErrorKind::IncompatibleVertexSpaces, "vid " + std::to_string(vid) + " reused");
  }
  by_vid_[vid] = Vertex{vid, color, std::move(label)};
  if (vid >= *next_) *next_ = vid + 1;
}

Vid VertexRegistry::intern(Color color, const std::string& key, std::string label) {
  auto it = ids_.find({color.value, key});
  if (it != ids_.end()) return it->second;
  const Vid vid = (*next_)++;
  ids_.emplace(std::make_pair(color.value, key), vid);
  by_vid_.emplace(vid, Vertex{vid, color, std::move(label)});
  return vid;
}

ChromaticComplex VertexRegistry::complex(std::size_t n, std::vector<Simplex> simplices) const {
  std::set<Vid> used;
  for (const auto& s : simplices) used.insert(s.begin(), s.end());
  std::vector<Vertex> vs;
  vs.reserve(used.size());
  for (Vid v : used) vs.push_back(by_vid_.at(v));
  return ChromaticComplex::generated_by(n, std::move(vs), std::move(simplices));
}

}  // namespace bim
