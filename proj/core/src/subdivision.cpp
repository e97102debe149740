#include "bim/subdivision.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

#include "bim/combinatorics.hpp"

namespace bim {

namespace {

std::string carrier_key(Color color, const Simplex& carrier) {
  std::ostringstream os;
  os << '(' << color.value << "|{";
  for (std::size_t i = 0; i < carrier.size(); ++i) os << (i ? "," : "") << carrier[i];
  os << "})";
  return os.str();
}

Vid max_vid(const ChromaticComplex& c) {
  return c.vertices().empty() ? 0 : c.vertices().back().vid;
}

}  // namespace

ChromaticComplex chromatic_subdivide(const ChromaticComplex& c, VertexRegistry& registry,
                                     const Limits& limits) {
  std::size_t total = 0;
  for (const auto& f : c.facets()) total += fubini(f.size());
  if (total > limits.max_facets) {
    throw Error(ErrorKind::ResourceLimit, "Ch would have " + std::to_string(total) +
                                              " facets (cap " + std::to_string(limits.max_facets) +
                                              ")");
  }
  for (const auto& vx : c.vertices()) {
    registry.pin(vx.color, carrier_key(vx.color, {vx.vid}), vx.label, vx.vid);
  }

  // Collect every (color, carrier) first so fresh vids follow sorted carrier order.
  struct Slot {
    Color color;
    Simplex carrier;
  };
  std::vector<std::vector<Slot>> facets;
  std::set<std::pair<Simplex, std::uint32_t>> pending;
  for (const auto& f : c.facets()) {
    for (const auto& ranks : ordered_partitions(f.size())) {
      std::vector<Slot> slots;
      for (std::size_t i = 0; i < f.size(); ++i) {
        Simplex carrier;
        for (std::size_t j = 0; j < f.size(); ++j) {
          if (ranks[j] <= ranks[i]) carrier.push_back(f[j]);
        }
        const Color color = c.color(f[i]);
        pending.emplace(carrier, color.value);
        slots.push_back({color, std::move(carrier)});
      }
      facets.push_back(std::move(slots));
    }
  }
  for (const auto& [carrier, color] : pending) {
    const std::string key = carrier_key(Color{color}, carrier);
    registry.intern(Color{color}, key, key);
  }
  std::vector<Simplex> simplices;
  simplices.reserve(facets.size());
  for (const auto& slots : facets) {
    Simplex s;
    for (const auto& slot : slots) {
      const std::string key = carrier_key(slot.color, slot.carrier);
      s.push_back(registry.intern(slot.color, key, key));
    }
    simplices.push_back(make_simplex(std::move(s)));
  }
  return registry.complex(c.n(), std::move(simplices));
}

ChromaticComplex chromatic_subdivide(const ChromaticComplex& c, const Limits& limits) {
  VertexRegistry registry(max_vid(c) + 1);
  return chromatic_subdivide(c, registry, limits);
}

ChromaticComplex iterate_subdivide(const ChromaticComplex& c, std::size_t rounds,
                                   const Limits& limits) {
  if (rounds == 0) throw Error(ErrorKind::InvalidParameters, "rounds must be >= 1");
  ChromaticComplex current = c;
  for (std::size_t r = 0; r < rounds; ++r) current = chromatic_subdivide(current, limits);
  return current;
}

std::vector<DegreeGrowthRow> degree_growth_table(std::size_t dim, std::size_t r_max,
                                                 const Limits& limits) {
  if (dim < 1 || r_max < 1) {
    throw Error(ErrorKind::InvalidParameters, "need dim >= 1 and r_max >= 1");
  }
  std::vector<DegreeGrowthRow> rows;
  ChromaticComplex current = standard_simplex(dim);
  for (std::size_t r = 1; r <= r_max; ++r) {
    current = chromatic_subdivide(current, limits);
    DegreeGrowthRow row;
    row.rounds = r;
    row.max_degree = current.max_degree();
    if (!rows.empty() && rows.back().max_degree > 0) {
      row.ratio = static_cast<double>(row.max_degree) / static_cast<double>(rows.back().max_degree);
    }
    row.template_value = std::pow(static_cast<double>(factorial(dim)), static_cast<double>(r - 1)) *
                         std::pow(2.0, static_cast<double>(dim)) * static_cast<double>(dim);
    rows.push_back(row);
  }
  return rows;
}

}  // namespace bim
