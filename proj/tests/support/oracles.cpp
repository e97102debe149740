#include "oracles.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <random>

namespace oracle {

std::set<Simplex> all_faces(const ChromaticComplex& c) {
  std::set<Simplex> out;
  for (const auto& f : c.facets()) {
    for (std::uint32_t mask = 1; mask < (1u << f.size()); ++mask) {
      Simplex s;
      for (std::size_t i = 0; i < f.size(); ++i) {
        if (mask & (1u << i)) s.push_back(f[i]);
      }
      out.insert(s);
    }
  }
  return out;
}

std::vector<std::size_t> f_vector(const ChromaticComplex& c) {
  std::vector<std::size_t> out;
  for (const auto& s : all_faces(c)) {
    if (out.size() < s.size()) out.resize(s.size(), 0);
    ++out[s.size() - 1];
  }
  return out;
}

bool isomorphic(const ChromaticComplex& a, const ChromaticComplex& b) {
  if (a.num_vertices() != b.num_vertices() || a.facets().size() != b.facets().size()) return false;
  std::map<std::uint32_t, std::vector<Vid>> ca, cb;
  for (const auto& v : a.vertices()) ca[v.color.value].push_back(v.vid);
  for (const auto& v : b.vertices()) cb[v.color.value].push_back(v.vid);
  if (ca.size() != cb.size()) return false;
  for (const auto& [color, vs] : ca) {
    if (!cb.count(color) || cb[color].size() != vs.size()) return false;
  }
  std::set<Simplex> target(b.facets().begin(), b.facets().end());
  std::vector<std::uint32_t> colors;
  for (const auto& [color, vs] : cb) colors.push_back(color);
  // Odometer over one permutation per color class.
  std::function<bool(std::size_t, std::map<Vid, Vid>&)> go = [&](std::size_t ci,
                                                                std::map<Vid, Vid>& map) {
    if (ci == colors.size()) {
      for (const auto& f : a.facets()) {
        Simplex img;
        for (Vid v : f) img.push_back(map.at(v));
        std::sort(img.begin(), img.end());
        if (!target.count(img)) return false;
      }
      return true;
    }
    std::vector<Vid> perm = cb[colors[ci]];
    std::sort(perm.begin(), perm.end());
    const auto& src = ca[colors[ci]];
    do {
      for (std::size_t i = 0; i < src.size(); ++i) map[src[i]] = perm[i];
      if (go(ci + 1, map)) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
  };
  std::map<Vid, Vid> map;
  return go(0, map);
}

std::set<Vid> two_hop_same_color(const ChromaticComplex& c, Vid v) {
  std::set<Vid> ones;
  for (const auto& f : c.facets()) {
    if (std::find(f.begin(), f.end(), v) != f.end()) ones.insert(f.begin(), f.end());
  }
  ones.erase(v);
  std::set<Vid> out;
  for (const auto& f : c.facets()) {
    const bool touches = std::any_of(f.begin(), f.end(), [&](Vid u) { return ones.count(u) > 0; });
    if (!touches) continue;
    for (Vid x : f) {
      if (x != v && c.color(x) == c.color(v)) {
        // x must share a facet with some u in `ones`, and u must differ from x.
        for (Vid u : f) {
          if (u != x && ones.count(u)) {
            out.insert(x);
            break;
          }
        }
      }
    }
  }
  return out;
}

std::vector<std::size_t> chromatic_subdivision_f_vector(std::size_t dim) {
  struct ChV {
    std::uint32_t color;
    std::uint32_t carrier;  // bitmask over base vertices
  };
  std::vector<ChV> vs;
  const std::uint32_t full = (1u << (dim + 1)) - 1u;
  for (std::uint32_t carrier = 1; carrier <= full; ++carrier) {
    for (std::uint32_t c = 0; c <= dim; ++c) {
      if (carrier & (1u << c)) vs.push_back({c, carrier});
    }
  }
  auto subset = [](std::uint32_t a, std::uint32_t b) { return (a & b) == a; };
  auto compatible = [&](const ChV& a, const ChV& b) {
    if (a.color == b.color) return false;
    if (!subset(a.carrier, b.carrier) && !subset(b.carrier, a.carrier)) return false;
    if ((b.carrier & (1u << a.color)) && !subset(a.carrier, b.carrier)) return false;
    if ((a.carrier & (1u << b.color)) && !subset(b.carrier, a.carrier)) return false;
    return true;
  };
  std::vector<std::size_t> counts(dim + 1, 0);
  std::vector<std::size_t> clique;
  std::function<void(std::size_t)> extend = [&](std::size_t from) {
    for (std::size_t i = from; i < vs.size(); ++i) {
      bool ok = std::all_of(clique.begin(), clique.end(),
                            [&](std::size_t j) { return compatible(vs[i], vs[j]); });
      if (!ok) continue;
      clique.push_back(i);
      ++counts[clique.size() - 1];
      extend(i + 1);
      clique.pop_back();
    }
  };
  extend(0);
  return counts;
}

std::size_t acyclic_miss_patterns(std::size_t k) {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      if (i != j) pairs.emplace_back(i, j);
    }
  }
  std::size_t count = 0;
  for (std::uint64_t edges = 0; edges < (std::uint64_t{1} << pairs.size()); ++edges) {
    std::vector<std::size_t> order(k);
    std::iota(order.begin(), order.end(), 0);
    bool acyclic = false;
    do {
      std::vector<std::size_t> pos(k);
      for (std::size_t i = 0; i < k; ++i) pos[order[i]] = i;
      bool forward = true;
      for (std::size_t e = 0; e < pairs.size(); ++e) {
        if ((edges >> e & 1) && pos[pairs[e].first] > pos[pairs[e].second]) forward = false;
      }
      if (forward) acyclic = true;
    } while (!acyclic && std::next_permutation(order.begin(), order.end()));
    if (acyclic) ++count;
  }
  return count;
}

std::optional<std::size_t> set_cover_optimum(const bim::SetCoverInstance& inst) {
  const std::size_t m = inst.subsets.size();
  std::optional<std::size_t> best;
  for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << m); ++pick) {
    std::set<std::uint32_t> covered;
    std::size_t used = 0;
    for (std::size_t i = 0; i < m; ++i) {
      if (pick >> i & 1) {
        covered.insert(inst.subsets[i].begin(), inst.subsets[i].end());
        ++used;
      }
    }
    const bool all = std::all_of(inst.universe.begin(), inst.universe.end(),
                                 [&](std::uint32_t e) { return covered.count(e) > 0; });
    if (all && (!best || used < *best)) best = used;
  }
  return best;
}

std::vector<bim::SetCoverInstance> all_instances(std::size_t m) {
  std::vector<std::vector<std::uint32_t>> nonempty;
  for (std::uint32_t mask = 1; mask < (1u << m); ++mask) {
    std::vector<std::uint32_t> s;
    for (std::uint32_t e = 0; e < m; ++e) {
      if (mask >> e & 1) s.push_back(e + 1);
    }
    nonempty.push_back(s);
  }
  std::vector<bim::SetCoverInstance> out;
  for (std::uint64_t fam = 0; fam < (std::uint64_t{1} << nonempty.size()); ++fam) {
    bim::SetCoverInstance inst;
    for (std::uint32_t e = 1; e <= m; ++e) inst.universe.push_back(e);
    for (std::size_t i = 0; i < nonempty.size(); ++i) {
      if (fam >> i & 1) inst.subsets.push_back(nonempty[i]);
    }
    out.push_back(std::move(inst));
  }
  return out;
}

std::vector<ChromaticComplex> random_pool(std::uint64_t seed, std::size_t count,
                                          std::size_t colors, std::size_t max_facets) {
  std::mt19937 rng(static_cast<std::uint32_t>(seed));
  std::vector<ChromaticComplex> out;
  while (out.size() < count) {
    std::uniform_int_distribution<std::size_t> nf(1, max_facets);
    const std::size_t target = nf(rng);
    std::vector<bim::Vertex> vs;
    std::vector<std::vector<Vid>> per_color(colors);
    std::set<Simplex> facets;
    auto fresh = [&](std::size_t c) {
      Vid v = static_cast<Vid>(vs.size());
      vs.push_back({v, bim::Color{static_cast<std::uint32_t>(c)}, "v" + std::to_string(v)});
      per_color[c].push_back(v);
      return v;
    };
    for (std::size_t tries = 0; facets.size() < target && tries < 100; ++tries) {
      Simplex f;
      for (std::size_t c = 0; c < colors; ++c) {
        const bool reuse = !per_color[c].empty() && (facets.empty() ? false : rng() % 3 != 0);
        if (reuse) {
          f.push_back(per_color[c][rng() % per_color[c].size()]);
        } else {
          f.push_back(fresh(c));
        }
      }
      std::sort(f.begin(), f.end());
      facets.insert(f);
    }
    std::vector<Simplex> fs(facets.begin(), facets.end());
    out.push_back(ChromaticComplex::build(colors, vs, fs));
  }
  return out;
}

}  // namespace oracle
