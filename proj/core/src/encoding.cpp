#include "bim/encoding.hpp"

namespace bim {

std::set<std::uint32_t> EncodingFunction::image() const {
  std::set<std::uint32_t> out;
  for (const auto& [vid, code] : codes_) out.insert(code);
  return out;
}

bool is_vertex_distinguishable(const ChromaticComplex& c, Vid v, const EncodingFunction& w,
                               BottomRule rule) {
  if (!c.has_vertex(v)) {
    throw Error(ErrorKind::VertexNotInComplex, "vertex " + std::to_string(v));
  }
  const EncodingValue mine = w(v);
  if (!mine && rule == BottomRule::WrittenOnly) return false;
  const Color color = c.color(v);
  for (Vid u : c.neighbors(v)) {
    for (Vid x : c.neighbors(u)) {
      if (x != v && c.color(x) == color && w(x) == mine) return false;
    }
  }
  return true;
}

bool is_simplex_distinguishable(const ChromaticComplex& c, const Simplex& s,
                                const EncodingFunction& w, BottomRule rule) {
  if (!c.contains_face(s)) {
    throw Error(ErrorKind::SimplexNotInComplex, "simplex is not a face");
  }
  for (Vid v : s) {
    if (!is_vertex_distinguishable(c, v, w, rule)) return false;
  }
  return true;
}

bool is_subcomplex_distinguishable(const ChromaticComplex& c, const ChromaticComplex& sub,
                                   const EncodingFunction& w, BottomRule rule) {
  if (!c.contains_subcomplex(sub)) {
    throw Error(ErrorKind::NotASubcomplex, "argument is not a subcomplex");
  }
  for (const auto& vx : sub.vertices()) {
    if (!is_vertex_distinguishable(c, vx.vid, w, rule)) return false;
  }
  return true;
}

std::vector<Vid> distinguishable_vertices(const ChromaticComplex& c, const EncodingFunction& w,
                                          BottomRule rule) {
  std::vector<Vid> out;
  for (const auto& vx : c.vertices()) {
    if (is_vertex_distinguishable(c, vx.vid, w, rule)) out.push_back(vx.vid);
  }
  return out;
}

namespace {

void collect_generators(const ChromaticComplex& c, const EncodingFunction& w, BottomRule rule,
                        std::vector<Simplex>& gens) {
  const std::vector<Vid> good = distinguishable_vertices(c, w, rule);
  for (const auto& f : c.facets()) {
    Simplex part = intersection(f, good);
    if (!part.empty()) gens.push_back(std::move(part));
  }
}

}  // namespace

ChromaticComplex distinguishable_subcomplex(const ChromaticComplex& c, const EncodingFunction& w,
                                            BottomRule rule) {
  std::vector<Simplex> gens;
  collect_generators(c, w, rule, gens);
  return c.subcomplex(gens);
}

ChromaticComplex distinguishable_subcomplex(const ChromaticComplex& c, const EncodingSequence& ws,
                                            BottomRule rule) {
  std::vector<Simplex> gens;
  for (const auto& w : ws) collect_generators(c, w, rule, gens);
  return c.subcomplex(gens);
}

std::uint32_t code_budget(unsigned bits) {
  if (bits == 0 || bits > 31) {
    throw Error(ErrorKind::InvalidParameters, "bits must lie in [1, 31]");
  }
  return (std::uint32_t{1} << bits) - 1u;
}

std::size_t lower_bound_rounds(const ChromaticComplex& c, unsigned bits) {
  if (c.empty()) throw Error(ErrorKind::InvalidParameters, "empty complex");
  const std::uint64_t denom = std::uint64_t{c.colors_present()} * code_budget(bits);
  const std::uint64_t deg = c.max_degree();
  return static_cast<std::size_t>((deg + denom - 1) / denom);
}

}  // namespace bim
