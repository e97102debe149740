#include "bim/greedy_star.hpp"

#include <algorithm>
#include <set>

namespace bim {

namespace {

// Vertices at distance exactly 2 with the same color as v (same-colored
// vertices are never adjacent, so these are all the ones within 2 hops).
std::set<Vid> same_color_ball(const ChromaticComplex& c, Vid v) {
  std::set<Vid> out;
  const Color color = c.color(v);
  for (Vid u : c.neighbors(v)) {
    for (Vid x : c.neighbors(u)) {
      if (x != v && c.color(x) == color) out.insert(x);
    }
  }
  return out;
}

std::uint32_t smallest_free(const std::set<std::uint32_t>& taken, std::uint32_t from) {
  std::uint32_t k = from;
  while (taken.count(k)) ++k;
  return k;
}

std::set<Vid> star_vertices(const ChromaticComplex& c, Vid v) {
  std::set<Vid> out;
  for (auto fi : c.facets_of(v)) {
    const auto& f = c.facets()[fi];
    out.insert(f.begin(), f.end());
  }
  return out;
}

}  // namespace

GreedyStarResult greedy_star(const ChromaticComplex& c, CodeRule rule) {
  if (c.empty()) throw Error(ErrorKind::InvalidParameters, "greedy star on an empty complex");
  const std::size_t total = c.facets().size();
  std::vector<bool> in_a(total, false);
  std::size_t covered_count = 0;
  std::set<Vid> pool;
  for (const auto& vx : c.vertices()) pool.insert(vx.vid);

  auto extends_cover = [&](Vid v) {
    for (auto fi : c.facets_of(v)) {
      if (!in_a[fi]) return true;
    }
    return false;
  };

  GreedyStarResult out;
  while (covered_count < total) {
    StarRound round;
    if (std::none_of(pool.begin(), pool.end(), extends_cover)) {
      pool.clear();
      for (std::size_t fi = 0; fi < total; ++fi) {
        if (!in_a[fi]) pool.insert(c.facets()[fi].begin(), c.facets()[fi].end());
      }
      round.refilled = true;
      ++out.trace.refills;
    }

    std::set<Vid> u_vertices;
    std::vector<std::uint32_t> u_facets;
    EncodingFunction w;
    for (Vid v : pool) {
      const std::set<Vid> star = star_vertices(c, v);
      bool clear = true;
      for (Vid x : star) {
        for (Vid y : star_vertices(c, x)) {
          if (u_vertices.count(y)) {
            clear = false;
            break;
          }
        }
        if (!clear) break;
      }
      if (!clear) continue;

      round.centers.push_back(v);
      for (auto fi : c.facets_of(v)) u_facets.push_back(fi);
      u_vertices.insert(star.begin(), star.end());
      for (Vid x : star) {
        std::set<std::uint32_t> taken;
        if (rule == CodeRule::Distance2) {
          for (Vid y : same_color_ball(c, x)) {
            if (auto k = w(y)) taken.insert(*k);
          }
        } else {
          for (Vid y : star) {
            if (y != x && c.color(y) == c.color(x)) {
              if (auto k = w(y)) taken.insert(*k);
            }
          }
        }
        w.set(x, smallest_free(taken, 0));
      }
    }

    std::vector<Simplex> gens;
    for (auto fi : u_facets) {
      gens.push_back(c.facets()[fi]);
      if (!in_a[fi]) {
        in_a[fi] = true;
        ++covered_count;
      }
    }
    for (Vid v : u_vertices) pool.erase(v);
    round.covered = c.subcomplex(gens);
    round.encoding = w;
    out.sequence.push_back(w);
    out.trace.rounds.push_back(std::move(round));
  }
  return out;
}

namespace {

// Facets of the part of c that w writes and makes distinguishable.
std::vector<Simplex> written_targets(const ChromaticComplex& c, const EncodingFunction& w) {
  const ChromaticComplex d = distinguishable_subcomplex(c, w, BottomRule::WrittenOnly);
  return {d.facets().begin(), d.facets().end()};
}

bool covers_targets(const ChromaticComplex& c, const EncodingSequence& parts,
                    const std::vector<Simplex>& targets) {
  const ChromaticComplex d = distinguishable_subcomplex(c, parts, BottomRule::WrittenOnly);
  return std::all_of(targets.begin(), targets.end(),
                     [&](const Simplex& t) { return d.contains_face(t); });
}

EncodingSequence contiguous_groups(const EncodingFunction& w, std::uint32_t budget) {
  const std::set<std::uint32_t> image = w.image();
  const std::vector<std::uint32_t> codes(image.begin(), image.end());
  EncodingSequence parts;
  for (std::size_t start = 0; start < codes.size(); start += budget) {
    const std::size_t stop = std::min(codes.size(), start + budget);
    std::map<std::uint32_t, std::uint32_t> remap;
    for (std::size_t i = start; i < stop; ++i) remap[codes[i]] = static_cast<std::uint32_t>(i - start + 1);
    std::map<Vid, std::uint32_t> part;
    for (const auto& [vid, code] : w.codes()) {
      auto it = remap.find(code);
      if (it != remap.end()) part[vid] = it->second;
    }
    parts.emplace_back(std::move(part));
  }
  return parts;
}

// Try to write all of `target` into `w` with codes 1..budget, each vertex
// avoiding the codes of same-colored written vertices two hops away.
bool place_facet(const ChromaticComplex& c, const Simplex& target, std::uint32_t budget,
                 EncodingFunction& w) {
  EncodingFunction trial = w;
  for (Vid x : target) {
    if (trial(x)) continue;
    std::set<std::uint32_t> taken;
    for (Vid y : same_color_ball(c, x)) {
      if (auto k = trial(y)) taken.insert(*k);
    }
    const std::uint32_t k = smallest_free(taken, 1);
    if (k > budget) return false;
    trial.set(x, k);
  }
  w = std::move(trial);
  return true;
}

EncodingSequence pack_facets(const ChromaticComplex& c, const std::vector<Simplex>& targets,
                             std::uint32_t budget) {
  EncodingSequence parts;
  for (const auto& t : targets) {
    bool placed = false;
    for (auto& part : parts) {
      if (place_facet(c, t, budget, part)) {
        placed = true;
        break;
      }
    }
    if (!placed) {
      parts.emplace_back();
      place_facet(c, t, budget, parts.back());
    }
  }
  return parts;
}

}  // namespace

std::vector<EncodingSequence> split_each_to_budget(const EncodingSequence& ws,
                                                   const ChromaticComplex& c, unsigned bits) {
  const std::uint32_t budget = code_budget(bits);
  std::vector<EncodingSequence> out;
  for (const auto& w : ws) {
    if (w.image_size() <= budget) {
      out.push_back({w});
      continue;
    }
    const std::vector<Simplex> targets = written_targets(c, w);
    EncodingSequence parts = contiguous_groups(w, budget);
    if (!covers_targets(c, parts, targets)) parts = pack_facets(c, targets, budget);
    out.push_back(std::move(parts));
  }
  return out;
}

EncodingSequence split_to_budget(const EncodingSequence& ws, const ChromaticComplex& c,
                                 unsigned bits) {
  EncodingSequence flat;
  for (auto& parts : split_each_to_budget(ws, c, bits)) {
    flat.insert(flat.end(), parts.begin(), parts.end());
  }
  return flat;
}

std::size_t upper_bound_rounds(const ChromaticComplex& c, unsigned bits) {
  return 4 * lower_bound_rounds(c, bits);
}

bool verify_cover(const ChromaticComplex& c, const EncodingSequence& ws, BottomRule rule) {
  return distinguishable_subcomplex(c, ws, rule) == c;
}

}  // namespace bim
