#include "bim/generators.hpp"

#include <optional>
#include <random>
#include <set>

namespace bim {

ChromaticComplex gen_simplex(std::size_t dim) { return standard_simplex(dim); }

ChromaticComplex gen_glued(std::size_t k, std::size_t dim) {
  if (k == 0 || dim == 0) throw Error(ErrorKind::InvalidParameters, "glued needs k >= 1, dim >= 1");
  std::vector<Vertex> vertices;
  for (std::size_t i = 0; i < k; ++i) {
    vertices.push_back({static_cast<Vid>(i), Color{0}, "a" + std::to_string(i + 1)});
  }
  Simplex shared;
  for (std::size_t j = 1; j <= dim; ++j) {
    const Vid v = static_cast<Vid>(k + j - 1);
    vertices.push_back({v, Color{static_cast<std::uint32_t>(j)}, "p" + std::to_string(j)});
    shared.push_back(v);
  }
  std::vector<Simplex> facets;
  for (std::size_t i = 0; i < k; ++i) {
    Simplex f = shared;
    f.push_back(static_cast<Vid>(i));
    facets.push_back(make_simplex(std::move(f)));
  }
  return ChromaticComplex::build(dim + 1, std::move(vertices), std::move(facets));
}

ChromaticComplex gen_path(std::size_t m, std::size_t dim) {
  if (m == 0) throw Error(ErrorKind::InvalidParameters, "path needs m >= 1");
  std::vector<Vertex> vertices;
  for (std::size_t j = 0; j < m + dim; ++j) {
    vertices.push_back({static_cast<Vid>(j), Color{static_cast<std::uint32_t>(j % (dim + 1))},
                        "v" + std::to_string(j)});
  }
  std::vector<Simplex> facets;
  for (std::size_t i = 0; i < m; ++i) {
    Simplex f;
    for (std::size_t j = i; j <= i + dim; ++j) f.push_back(static_cast<Vid>(j));
    facets.push_back(std::move(f));
  }
  return ChromaticComplex::build(dim + 1, std::move(vertices), std::move(facets));
}

ChromaticComplex gen_random(std::uint64_t seed, std::size_t n, std::size_t facets) {
  if (n == 0 || facets == 0) {
    throw Error(ErrorKind::InvalidParameters, "random needs n >= 1 and facets >= 1");
  }
  if (n == 1 && facets > 1) {
    throw Error(ErrorKind::InvalidParameters, "a 1-color complex has a single facet");
  }
  std::mt19937_64 rng(seed);
  std::vector<Vertex> vertices;
  std::vector<std::vector<Vid>> by_color(n);
  auto fresh = [&](std::size_t color) {
    const Vid v = static_cast<Vid>(vertices.size());
    vertices.push_back({v, Color{static_cast<std::uint32_t>(color)}, "r" + std::to_string(v)});
    by_color[color].push_back(v);
    return v;
  };

  // facet stored as vid per color
  std::vector<std::vector<Vid>> rows;
  std::set<Simplex> seen;
  std::vector<Vid> first;
  for (std::size_t color = 0; color < n; ++color) first.push_back(fresh(color));
  rows.push_back(first);
  seen.insert(make_simplex(first));

  std::size_t attempts = 0;
  while (rows.size() < facets) {
    if (++attempts > 1000 * facets) {
      throw Error(ErrorKind::InvalidParameters, "could not draw distinct facets");
    }
    const auto& base = rows[rng() % rows.size()];
    const std::size_t keep = 1 + rng() % (n - 1);
    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = i;
    for (std::size_t i = n - 1; i > 0; --i) std::swap(order[i], order[rng() % (i + 1)]);
    std::vector<std::optional<Vid>> row(n);
    for (std::size_t i = 0; i < keep; ++i) row[order[i]] = base[order[i]];
    // Decide the other slots first so a rejected draw creates no vertices.
    std::vector<std::optional<Vid>> reuse(n);
    for (std::size_t color = 0; color < n; ++color) {
      if (row[color]) continue;
      if (rng() % 2 == 0) {
        const auto& pool = by_color[color];
        reuse[color] = pool[rng() % pool.size()];
      }
    }
    std::vector<Vid> candidate;
    bool has_fresh = false;
    for (std::size_t color = 0; color < n; ++color) {
      if (row[color]) {
        candidate.push_back(*row[color]);
      } else if (reuse[color]) {
        candidate.push_back(*reuse[color]);
      } else {
        has_fresh = true;
      }
    }
    if (!has_fresh && seen.count(make_simplex(candidate))) continue;
    std::vector<Vid> full;
    for (std::size_t color = 0; color < n; ++color) {
      full.push_back(row[color] ? *row[color] : reuse[color] ? *reuse[color] : fresh(color));
    }
    seen.insert(make_simplex(full));
    rows.push_back(std::move(full));
  }
  std::vector<Simplex> out;
  for (const auto& r : rows) out.push_back(make_simplex(r));
  return ChromaticComplex::build(n, std::move(vertices), std::move(out));
}

}  // namespace bim
