#include "bim/complex.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>
#include <unordered_map>

namespace bim {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DuplicateColorInFacet: return "DuplicateColorInFacet";
    case ErrorKind::FacetContainment: return "FacetContainment";
    case ErrorKind::DanglingVertexReference: return "DanglingVertexReference";
    case ErrorKind::SimplexNotInComplex: return "SimplexNotInComplex";
    case ErrorKind::VertexNotInComplex: return "VertexNotInComplex";
    case ErrorKind::IncompatibleVertexSpaces: return "IncompatibleVertexSpaces";
    case ErrorKind::NotAFacet: return "NotAFacet";
    case ErrorKind::NotASubcomplex: return "NotASubcomplex";
    case ErrorKind::AmbiguousDecode: return "AmbiguousDecode";
    case ErrorKind::ResourceLimit: return "ResourceLimit";
    case ErrorKind::InvalidParameters: return "InvalidParameters";
    case ErrorKind::UnsupportedFormat: return "UnsupportedFormat";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

Simplex make_simplex(std::vector<Vid> vids) {
  std::sort(vids.begin(), vids.end());
  vids.erase(std::unique(vids.begin(), vids.end()), vids.end());
  return vids;
}

bool is_subset(const Simplex& small, const Simplex& big) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

Simplex intersection(const Simplex& a, const Simplex& b) {
  Simplex out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

namespace {

std::string describe(const Simplex& s) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < s.size(); ++i) os << (i ? "," : "") << s[i];
  os << '}';
  return os.str();
}

// Keeps only inclusion-maximal members; input need not be sorted.
std::vector<Simplex> maximal_only(std::vector<Simplex> simplices) {
  for (auto& s : simplices) s = make_simplex(std::move(s));
  std::sort(simplices.begin(), simplices.end());
  simplices.erase(std::unique(simplices.begin(), simplices.end()), simplices.end());
  std::stable_sort(simplices.begin(), simplices.end(),
                   [](const Simplex& a, const Simplex& b) { return a.size() > b.size(); });
  std::vector<Simplex> kept;
  std::unordered_map<Vid, std::vector<std::size_t>> by_vertex;
  for (auto& s : simplices) {
    if (s.empty()) continue;
    bool covered = false;
    if (auto it = by_vertex.find(s.front()); it != by_vertex.end()) {
      for (std::size_t k : it->second) {
        if (kept[k].size() > s.size() && is_subset(s, kept[k])) {
          covered = true;
          break;
        }
      }
    }
    if (covered) continue;
    for (Vid v : s) by_vertex[v].push_back(kept.size());
    kept.push_back(std::move(s));
  }
  std::sort(kept.begin(), kept.end());
  return kept;
}

}  // namespace

ChromaticComplex ChromaticComplex::build(std::size_t n, std::vector<Vertex> vertices,
                                         std::vector<Simplex> facets) {
  std::sort(vertices.begin(), vertices.end(),
            [](const Vertex& a, const Vertex& b) { return a.vid < b.vid; });
  for (std::size_t i = 1; i < vertices.size(); ++i) {
    if (vertices[i].vid == vertices[i - 1].vid) {
      throw Error(ErrorKind::InvalidParameters,
                  "vid " + std::to_string(vertices[i].vid) + " listed twice");
    }
  }
  auto find = [&](Vid v) -> const Vertex* {
    auto it = std::lower_bound(vertices.begin(), vertices.end(), v,
                               [](const Vertex& x, Vid id) { return x.vid < id; });
    return it != vertices.end() && it->vid == v ? &*it : nullptr;
  };
  for (const auto& vx : vertices) {
    if (vx.color.value >= n) {
      throw Error(ErrorKind::InvalidParameters, "vertex " + std::to_string(vx.vid) +
                                                    " has color " + std::to_string(vx.color.value) +
                                                    " >= n = " + std::to_string(n));
    }
  }
  for (auto& f : facets) {
    if (f.empty()) throw Error(ErrorKind::InvalidParameters, "empty facet");
    std::vector<Vid> raw = f;
    std::set<std::uint32_t> colors;
    std::sort(raw.begin(), raw.end());
    for (std::size_t i = 0; i < raw.size(); ++i) {
      const Vertex* vx = find(raw[i]);
      if (vx == nullptr) {
        throw Error(ErrorKind::DanglingVertexReference,
                    "facet " + describe(raw) + " references unknown vid " + std::to_string(raw[i]));
      }
      if ((i > 0 && raw[i] == raw[i - 1]) || !colors.insert(vx->color.value).second) {
        throw Error(ErrorKind::DuplicateColorInFacet,
                    "facet " + describe(raw) + " repeats color " + std::to_string(vx->color.value));
      }
    }
    f = make_simplex(std::move(f));
  }
  for (std::size_t i = 0; i < facets.size(); ++i) {
    for (std::size_t j = 0; j < facets.size(); ++j) {
      if (i != j && facets[i].size() <= facets[j].size() && is_subset(facets[i], facets[j])) {
        throw Error(ErrorKind::FacetContainment,
                    "facet " + describe(facets[i]) + " is contained in " + describe(facets[j]));
      }
    }
  }
  return generated_by(n, std::move(vertices), std::move(facets));
}

ChromaticComplex ChromaticComplex::generated_by(std::size_t n, std::vector<Vertex> vertices,
                                                std::vector<Simplex> simplices) {
  ChromaticComplex c;
  c.n_ = n;
  c.facets_ = maximal_only(std::move(simplices));
  std::set<Vid> used;
  for (const auto& f : c.facets_) used.insert(f.begin(), f.end());
  std::sort(vertices.begin(), vertices.end(),
            [](const Vertex& a, const Vertex& b) { return a.vid < b.vid; });
  for (auto& vx : vertices) {
    if (used.count(vx.vid) && (c.vertices_.empty() || c.vertices_.back().vid != vx.vid)) {
      c.vertices_.push_back(std::move(vx));
    }
  }
  if (c.vertices_.size() != used.size()) {
    throw Error(ErrorKind::DanglingVertexReference, "generator references a vid with no vertex");
  }
  for (const auto& f : c.facets_) {
    std::set<std::uint32_t> colors;
    for (Vid v : f) {
      if (!colors.insert(c.color(v).value).second) {
        throw Error(ErrorKind::DuplicateColorInFacet, "simplex " + describe(f) + " is not rainbow");
      }
    }
  }
  c.index();
  return c;
}

void ChromaticComplex::index() {
  adjacency_.assign(vertices_.size(), {});
  incidence_.assign(vertices_.size(), {});
  for (std::uint32_t fi = 0; fi < facets_.size(); ++fi) {
    const auto& f = facets_[fi];
    for (Vid v : f) {
      std::size_t i = require_index(v);
      incidence_[i].push_back(fi);
      for (Vid u : f) {
        if (u != v) adjacency_[i].push_back(u);
      }
    }
  }
  for (auto& adj : adjacency_) {
    std::sort(adj.begin(), adj.end());
    adj.erase(std::unique(adj.begin(), adj.end()), adj.end());
  }
}

std::optional<std::size_t> ChromaticComplex::index_of(Vid v) const {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v,
                             [](const Vertex& x, Vid id) { return x.vid < id; });
  if (it == vertices_.end() || it->vid != v) return std::nullopt;
  return static_cast<std::size_t>(it - vertices_.begin());
}

std::size_t ChromaticComplex::require_index(Vid v) const {
  auto i = index_of(v);
  if (!i) throw Error(ErrorKind::VertexNotInComplex, "vid " + std::to_string(v));
  return *i;
}

int ChromaticComplex::dimension() const {
  int d = -1;
  for (const auto& f : facets_) d = std::max(d, static_cast<int>(f.size()) - 1);
  return d;
}

const Vertex& ChromaticComplex::vertex(Vid v) const { return vertices_[require_index(v)]; }

std::span<const Vid> ChromaticComplex::neighbors(Vid v) const {
  return adjacency_[require_index(v)];
}

std::span<const std::uint32_t> ChromaticComplex::facets_of(Vid v) const {
  return incidence_[require_index(v)];
}

bool ChromaticComplex::adjacent(Vid u, Vid v) const {
  auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::size_t ChromaticComplex::colors_present() const {
  std::set<std::uint32_t> colors;
  for (const auto& vx : vertices_) colors.insert(vx.color.value);
  return colors.size();
}

std::size_t ChromaticComplex::max_degree() const {
  std::size_t best = 0;
  for (const auto& adj : adjacency_) best = std::max(best, adj.size());
  return best;
}

bool ChromaticComplex::contains_face(const Simplex& s) const {
  if (s.empty()) return true;
  auto i = index_of(s.front());
  if (!i) return false;
  for (std::uint32_t fi : incidence_[*i]) {
    if (is_subset(s, facets_[fi])) return true;
  }
  return false;
}

std::vector<Simplex> ChromaticComplex::faces() const {
  std::set<Simplex> out;
  for (const auto& f : facets_) {
    const std::size_t k = f.size();
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << k); ++mask) {
      Simplex s;
      for (std::size_t i = 0; i < k; ++i) {
        if (mask & (std::uint64_t{1} << i)) s.push_back(f[i]);
      }
      out.insert(std::move(s));
    }
  }
  return {out.begin(), out.end()};
}

FVector ChromaticComplex::f_vector() const {
  FVector counts(static_cast<std::size_t>(dimension() + 1), 0);
  for (const auto& s : faces()) ++counts[s.size() - 1];
  return counts;
}

long long ChromaticComplex::euler_characteristic() const {
  long long chi = 0;
  const auto fv = f_vector();
  for (std::size_t k = 0; k < fv.size(); ++k) {
    chi += (k % 2 == 0 ? 1 : -1) * static_cast<long long>(fv[k]);
  }
  return chi;
}

ChromaticComplex ChromaticComplex::star(const Simplex& s) const {
  const Simplex key = make_simplex(s);
  if (key.empty() || !contains_face(key)) {
    throw Error(ErrorKind::SimplexNotInComplex, "star of " + describe(key));
  }
  std::vector<Simplex> chosen;
  for (std::uint32_t fi : incidence_[require_index(key.front())]) {
    if (is_subset(key, facets_[fi])) chosen.push_back(facets_[fi]);
  }
  return subcomplex(chosen);
}

ChromaticComplex ChromaticComplex::link(Vid v) const {
  const std::size_t i = require_index(v);
  std::vector<Simplex> parts;
  for (std::uint32_t fi : incidence_[i]) {
    Simplex rest;
    for (Vid u : facets_[fi]) {
      if (u != v) rest.push_back(u);
    }
    if (!rest.empty()) parts.push_back(std::move(rest));
  }
  return subcomplex(parts);
}

ChromaticComplex ChromaticComplex::subcomplex(const std::vector<Simplex>& generators) const {
  std::set<Vid> used;
  for (const auto& g : generators) {
    if (!contains_face(make_simplex(g))) {
      throw Error(ErrorKind::SimplexNotInComplex, "generator " + describe(make_simplex(g)));
    }
    used.insert(g.begin(), g.end());
  }
  std::vector<Vertex> vs;
  for (Vid v : used) vs.push_back(vertex(v));
  return generated_by(n_, std::move(vs), generators);
}

bool ChromaticComplex::contains_subcomplex(const ChromaticComplex& sub) const {
  for (const auto& vx : sub.vertices()) {
    auto i = index_of(vx.vid);
    if (!i || vertices_[*i].color != vx.color) return false;
  }
  for (const auto& f : sub.facets()) {
    if (!contains_face(f)) return false;
  }
  return true;
}

bool ChromaticComplex::operator==(const ChromaticComplex& other) const {
  return vertices_ == other.vertices_ && facets_ == other.facets_;
}

namespace {

std::vector<Vertex> merged_vertex_table(const ChromaticComplex& a, const ChromaticComplex& b) {
  std::map<Vid, Vertex> table;
  for (const auto& vx : a.vertices()) table.emplace(vx.vid, vx);
  for (const auto& vx : b.vertices()) {
    auto [it, inserted] = table.emplace(vx.vid, vx);
    if (!inserted && !(it->second == vx)) {
      throw Error(ErrorKind::IncompatibleVertexSpaces,
                  "vid " + std::to_string(vx.vid) + " differs between complexes");
    }
  }
  std::vector<Vertex> out;
  for (auto& [_, vx] : table) out.push_back(std::move(vx));
  return out;
}

}  // namespace

ChromaticComplex intersect(const ChromaticComplex& a, const ChromaticComplex& b) {
  auto table = merged_vertex_table(a, b);
  std::vector<Simplex> common;
  for (const auto& fa : a.facets()) {
    std::set<std::uint32_t> candidates;
    for (Vid v : fa) {
      if (!b.has_vertex(v)) continue;
      auto inc = b.facets_of(v);
      candidates.insert(inc.begin(), inc.end());
    }
    for (std::uint32_t fb : candidates) {
      Simplex s = intersection(fa, b.facets()[fb]);
      if (!s.empty()) common.push_back(std::move(s));
    }
  }
  return ChromaticComplex::generated_by(std::max(a.n(), b.n()), std::move(table),
                                        std::move(common));
}

ChromaticComplex unite(const ChromaticComplex& a, const ChromaticComplex& b) {
  auto table = merged_vertex_table(a, b);
  std::vector<Simplex> all(a.facets().begin(), a.facets().end());
  all.insert(all.end(), b.facets().begin(), b.facets().end());
  return ChromaticComplex::generated_by(std::max(a.n(), b.n()), std::move(table), std::move(all));
}

bool is_isomorphism(const ChromaticComplex& a, const ChromaticComplex& b, const VertexMap& map) {
  if (a.num_vertices() != b.num_vertices() || map.size() != a.num_vertices()) return false;
  std::set<Vid> image;
  for (const auto& vx : a.vertices()) {
    auto it = map.find(vx.vid);
    if (it == map.end() || !b.has_vertex(it->second)) return false;
    if (b.color(it->second) != vx.color) return false;
    image.insert(it->second);
  }
  if (image.size() != a.num_vertices()) return false;
  std::set<Simplex> mapped;
  for (const auto& f : a.facets()) {
    Simplex g;
    for (Vid v : f) g.push_back(map.at(v));
    mapped.insert(make_simplex(std::move(g)));
  }
  std::set<Simplex> target(b.facets().begin(), b.facets().end());
  return mapped == target;
}

namespace {

// Color refinement over the 1-skeleton, seeded with color, degree and the
// facet-size profile. Computed on both complexes with a shared dictionary so
// class ids are comparable.
class Refiner {
 public:
  std::vector<std::uint32_t> initial(const ChromaticComplex& c) {
    std::vector<std::uint32_t> ids;
    for (const auto& vx : c.vertices()) {
      std::vector<std::uint64_t> key{vx.color.value, c.degree(vx.vid)};
      std::vector<std::uint64_t> sizes;
      for (std::uint32_t fi : c.facets_of(vx.vid)) sizes.push_back(c.facets()[fi].size());
      std::sort(sizes.begin(), sizes.end());
      key.insert(key.end(), sizes.begin(), sizes.end());
      ids.push_back(intern(std::move(key)));
    }
    return ids;
  }

  std::vector<std::uint32_t> step(const ChromaticComplex& c, const std::vector<std::uint32_t>& ids) {
    std::vector<std::uint32_t> out;
    const auto vs = c.vertices();
    for (std::size_t i = 0; i < vs.size(); ++i) {
      std::vector<std::uint64_t> key{std::uint64_t{0xFFFFFFFFu}, ids[i]};
      std::vector<std::uint64_t> nb;
      for (Vid u : c.neighbors(vs[i].vid)) nb.push_back(ids[position(c, u)]);
      std::sort(nb.begin(), nb.end());
      key.insert(key.end(), nb.begin(), nb.end());
      out.push_back(intern(std::move(key)));
    }
    return out;
  }

  static std::size_t position(const ChromaticComplex& c, Vid v) {
    const auto vs = c.vertices();
    return static_cast<std::size_t>(
        std::lower_bound(vs.begin(), vs.end(), v,
                         [](const Vertex& x, Vid id) { return x.vid < id; }) -
        vs.begin());
  }

 private:
  std::uint32_t intern(std::vector<std::uint64_t> key) {
    auto [it, _] = dict_.emplace(std::move(key), static_cast<std::uint32_t>(dict_.size()));
    return it->second;
  }
  std::map<std::vector<std::uint64_t>, std::uint32_t> dict_;
};

std::size_t count_classes(const std::vector<std::uint32_t>& ids) {
  return std::set<std::uint32_t>(ids.begin(), ids.end()).size();
}

class IsoSearch {
 public:
  IsoSearch(const ChromaticComplex& a, const ChromaticComplex& b, std::vector<std::uint32_t> sig_a,
            std::vector<std::uint32_t> sig_b)
      : a_(a), b_(b), sig_a_(std::move(sig_a)), sig_b_(std::move(sig_b)) {
    facets_b_.insert(b.facets().begin(), b.facets().end());
    mapped_a_.assign(a.num_vertices(), kNone);
    used_b_.assign(b.num_vertices(), false);
    facet_fill_.assign(a.facets().size(), 0);
    order_ = search_order();
  }

  std::optional<VertexMap> run() {
    if (!extend(0)) return std::nullopt;
    VertexMap out;
    const auto va = a_.vertices();
    const auto vb = b_.vertices();
    for (std::size_t i = 0; i < va.size(); ++i) out[va[i].vid] = vb[mapped_a_[i]].vid;
    return out;
  }

 private:
  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);

  // BFS per component, starting from the rarest signature so candidates for
  // later vertices are restricted to neighbors of already-mapped images.
  std::vector<std::size_t> search_order() const {
    const std::size_t nv = a_.num_vertices();
    std::map<std::uint32_t, std::size_t> freq;
    for (auto s : sig_a_) ++freq[s];
    std::vector<std::size_t> by_rarity(nv);
    std::iota(by_rarity.begin(), by_rarity.end(), 0);
    std::stable_sort(by_rarity.begin(), by_rarity.end(), [&](std::size_t x, std::size_t y) {
      return freq.at(sig_a_[x]) < freq.at(sig_a_[y]);
    });
    std::vector<bool> seen(nv, false);
    std::vector<std::size_t> order;
    const auto va = a_.vertices();
    for (std::size_t root : by_rarity) {
      if (seen[root]) continue;
      std::vector<std::size_t> queue{root};
      seen[root] = true;
      for (std::size_t head = 0; head < queue.size(); ++head) {
        std::size_t i = queue[head];
        order.push_back(i);
        for (Vid u : a_.neighbors(va[i].vid)) {
          std::size_t j = Refiner::position(a_, u);
          if (!seen[j]) {
            seen[j] = true;
            queue.push_back(j);
          }
        }
      }
    }
    return order;
  }

  bool consistent(std::size_t ia, std::size_t ib) const {
    const auto va = a_.vertices();
    const auto vb = b_.vertices();
    std::size_t mapped_nb_a = 0;
    for (Vid u : a_.neighbors(va[ia].vid)) {
      std::size_t j = Refiner::position(a_, u);
      if (mapped_a_[j] == kNone) continue;
      ++mapped_nb_a;
      if (!b_.adjacent(vb[ib].vid, vb[mapped_a_[j]].vid)) return false;
    }
    std::size_t mapped_nb_b = 0;
    for (Vid w : b_.neighbors(vb[ib].vid)) {
      if (used_b_[Refiner::position(b_, w)]) ++mapped_nb_b;
    }
    return mapped_nb_a == mapped_nb_b;
  }

  bool assign(std::size_t ia, std::size_t ib) {
    mapped_a_[ia] = ib;
    used_b_[ib] = true;
    const auto va = a_.vertices();
    const auto vb = b_.vertices();
    bool ok = true;
    for (std::uint32_t fi : a_.facets_of(va[ia].vid)) {
      const auto& f = a_.facets()[fi];
      if (++facet_fill_[fi] == f.size() && ok) {
        Simplex img;
        for (Vid v : f) img.push_back(vb[mapped_a_[Refiner::position(a_, v)]].vid);
        ok = facets_b_.count(make_simplex(std::move(img))) > 0;
      }
    }
    return ok;
  }

  void unassign(std::size_t ia, std::size_t ib) {
    for (std::uint32_t fi : a_.facets_of(a_.vertices()[ia].vid)) --facet_fill_[fi];
    mapped_a_[ia] = kNone;
    used_b_[ib] = false;
  }

  bool extend(std::size_t depth) {
    if (depth == order_.size()) return true;
    const std::size_t ia = order_[depth];
    const auto va = a_.vertices();
    const auto vb = b_.vertices();
    std::vector<std::size_t> candidates;
    std::optional<std::size_t> anchor;
    for (Vid u : a_.neighbors(va[ia].vid)) {
      std::size_t j = Refiner::position(a_, u);
      if (mapped_a_[j] != kNone) {
        anchor = mapped_a_[j];
        break;
      }
    }
    if (anchor) {
      for (Vid w : b_.neighbors(vb[*anchor].vid)) candidates.push_back(Refiner::position(b_, w));
    } else {
      candidates.resize(vb.size());
      std::iota(candidates.begin(), candidates.end(), 0);
    }
    for (std::size_t ib : candidates) {
      if (used_b_[ib] || sig_b_[ib] != sig_a_[ia]) continue;
      if (!consistent(ia, ib)) continue;
      if (assign(ia, ib) && extend(depth + 1)) return true;
      unassign(ia, ib);
    }
    return false;
  }

  const ChromaticComplex& a_;
  const ChromaticComplex& b_;
  std::vector<std::uint32_t> sig_a_;
  std::vector<std::uint32_t> sig_b_;
  std::set<Simplex> facets_b_;
  std::vector<std::size_t> mapped_a_;
  std::vector<bool> used_b_;
  std::vector<std::size_t> facet_fill_;
  std::vector<std::size_t> order_;
};

}  // namespace

std::optional<VertexMap> find_isomorphism(const ChromaticComplex& a, const ChromaticComplex& b) {
  if (a.num_vertices() != b.num_vertices() || a.facets().size() != b.facets().size()) {
    return std::nullopt;
  }
  if (a.empty()) return VertexMap{};
  Refiner refiner;
  auto sa = refiner.initial(a);
  auto sb = refiner.initial(b);
  for (std::size_t round = 0; round < a.num_vertices(); ++round) {
    auto na = refiner.step(a, sa);
    auto nb = refiner.step(b, sb);
    const bool stable = count_classes(na) == count_classes(sa);
    sa = std::move(na);
    sb = std::move(nb);
    if (stable) break;
  }
  auto sorted_a = sa;
  auto sorted_b = sb;
  std::sort(sorted_a.begin(), sorted_a.end());
  std::sort(sorted_b.begin(), sorted_b.end());
  if (sorted_a != sorted_b) return std::nullopt;
  return IsoSearch(a, b, std::move(sa), std::move(sb)).run();
}

ChromaticComplex standard_simplex(std::size_t dim) {
  std::vector<Vertex> vs;
  Simplex f;
  for (Vid v = 0; v <= dim; ++v) {
    vs.push_back({v, Color{v}, "x" + std::to_string(v)});
    f.push_back(v);
  }
  return ChromaticComplex::build(dim + 1, std::move(vs), {f});
}

}  // namespace bim
