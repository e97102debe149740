#include "bim/set_cover.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace bim {

void validate(const SetCoverInstance& inst) {
  const std::set<std::uint32_t> universe(inst.universe.begin(), inst.universe.end());
  if (universe.size() != inst.universe.size()) {
    throw Error(ErrorKind::InvalidParameters, "universe repeats an element");
  }
  for (const auto& s : inst.subsets) {
    if (s.empty()) throw Error(ErrorKind::InvalidParameters, "empty subset");
    for (auto e : s) {
      if (!universe.count(e)) {
        throw Error(ErrorKind::InvalidParameters,
                    "subset element " + std::to_string(e) + " is outside the universe");
      }
    }
  }
}

bool covers_universe(const SetCoverInstance& inst) {
  std::set<std::uint32_t> seen;
  for (const auto& s : inst.subsets) seen.insert(s.begin(), s.end());
  return std::all_of(inst.universe.begin(), inst.universe.end(),
                     [&](std::uint32_t e) { return seen.count(e) > 0; });
}

ReductionResult set_cover_reduce_explained(const SetCoverInstance& inst) {
  validate(inst);
  std::vector<std::uint32_t> elems = inst.universe;
  std::sort(elems.begin(), elems.end());
  const std::size_t m = elems.size();
  if (m == 0) throw Error(ErrorKind::InvalidParameters, "empty universe");
  const std::size_t colors = m + 1;

  auto together = [&](std::uint32_t a, std::uint32_t b) {
    return std::any_of(inst.subsets.begin(), inst.subsets.end(), [&](const auto& s) {
      return std::find(s.begin(), s.end(), a) != s.end() &&
             std::find(s.begin(), s.end(), b) != s.end();
    });
  };

  ReductionResult out;
  std::vector<Vertex> vertices;
  // slot[i][color] = vid used by element i's facet for that color.
  std::vector<std::vector<std::optional<Vid>>> slot(m, std::vector<std::optional<Vid>>(colors));
  Vid next = 0;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      if (together(elems[i], elems[j])) continue;
      std::size_t color = 0;
      while (color < colors && (slot[i][color] || slot[j][color])) ++color;
      if (color == colors) {
        throw Error(ErrorKind::InvalidParameters, "shared vertices do not fit in " +
                                                      std::to_string(colors) + " colors");
      }
      const std::string label =
          "s" + std::to_string(elems[i]) + "," + std::to_string(elems[j]);
      vertices.push_back({next, Color{static_cast<std::uint32_t>(color)}, label});
      slot[i][color] = next;
      slot[j][color] = next;
      out.log.push_back("elements " + std::to_string(elems[i]) + " and " +
                        std::to_string(elems[j]) + " share no subset: vertex " +
                        std::to_string(next) + " of color " + std::to_string(color));
      ++next;
    }
  }
  std::vector<Simplex> facets;
  for (std::size_t i = 0; i < m; ++i) {
    Simplex f;
    for (std::size_t color = 0; color < colors; ++color) {
      if (!slot[i][color]) {
        vertices.push_back({next, Color{static_cast<std::uint32_t>(color)},
                            "u" + std::to_string(elems[i]) + "." + std::to_string(color)});
        slot[i][color] = next++;
      }
      f.push_back(*slot[i][color]);
    }
    facets.push_back(make_simplex(std::move(f)));
  }
  out.log.push_back(std::to_string(m) + " facets of dimension " + std::to_string(m) + ", " +
                    std::to_string(next) + " vertices");
  out.element_facets = facets;
  out.complex = ChromaticComplex::build(colors, std::move(vertices), std::move(facets));
  return out;
}

ChromaticComplex set_cover_reduce(const SetCoverInstance& inst) {
  return set_cover_reduce_explained(inst).complex;
}

ExactMinResult exact_min_sequence(const ChromaticComplex& c) {
  if (c.num_vertices() > 12) {
    throw Error(ErrorKind::ResourceLimit, "exact search is capped at 12 vertices");
  }
  const std::size_t nf = c.facets().size();
  if (nf > 20) throw Error(ErrorKind::ResourceLimit, "exact search is capped at 20 facets");
  if (nf == 0) return {};

  const std::uint32_t full = (std::uint32_t{1} << nf) - 1u;
  auto writing = [&](std::uint32_t mask) {
    std::map<Vid, std::uint32_t> codes;
    for (std::size_t i = 0; i < nf; ++i) {
      if (mask & (1u << i)) {
        for (Vid v : c.facets()[i]) codes[v] = 1;
      }
    }
    return EncodingFunction(std::move(codes));
  };
  // A round writes 1 on the union of some facets; any other vertex written
  // would only add conflicts.
  std::vector<std::uint32_t> rounds;
  for (std::uint32_t mask = 1; mask <= full; ++mask) {
    const EncodingFunction w = writing(mask);
    bool ok = true;
    for (const auto& [v, code] : w.codes()) {
      if (!is_vertex_distinguishable(c, v, w, BottomRule::WrittenOnly)) {
        ok = false;
        break;
      }
    }
    if (ok) rounds.push_back(mask);
  }

  // Breadth-first over covered-facet masks.
  constexpr std::uint32_t kUnseen = ~std::uint32_t{0};
  std::vector<std::uint32_t> dist(std::size_t{full} + 1, kUnseen);
  std::vector<std::pair<std::uint32_t, std::uint32_t>> parent(std::size_t{full} + 1);
  std::vector<std::uint32_t> frontier{0};
  dist[0] = 0;
  while (!frontier.empty() && dist[full] == kUnseen) {
    std::vector<std::uint32_t> next;
    for (std::uint32_t m : frontier) {
      for (std::uint32_t r : rounds) {
        const std::uint32_t to = m | r;
        if (dist[to] != kUnseen) continue;
        dist[to] = dist[m] + 1;
        parent[to] = {m, r};
        next.push_back(to);
      }
    }
    frontier = std::move(next);
  }

  ExactMinResult out;
  out.length = dist[full];
  for (std::uint32_t m = full; m != 0; m = parent[m].first) {
    out.sequence.push_back(writing(parent[m].second));
  }
  std::reverse(out.sequence.begin(), out.sequence.end());
  return out;
}

}  // namespace bim
