#pragma once

#include <optional>

#include "bim/complex.hpp"

namespace bim {

struct BoundsReport {
  std::size_t n = 0;
  std::size_t r = 0;
  unsigned b = 0;
  /// Two processes need a single bounded round; the n > 2 templates are skipped.
  bool two_processes = false;
  /// (n!)^(r-1) 2^(n-b), the collect round-complexity template.
  std::optional<double> lower_formula;
  /// lower_formula * n, the snapshot variants built on top of collect.
  std::optional<double> snapshot_upper_formula;
  std::optional<std::size_t> reported_rounds;
  /// Evaluated on a supplied complex.
  std::optional<std::size_t> degree_lower_bound;
  std::optional<std::size_t> star_upper_bound;
  /// Total budgeted rounds of the pipeline, when it was run.
  std::optional<std::size_t> measured_rounds;
};

/// Throws InvalidParameters unless n >= 2, r >= 1 and 1 <= b <= 31.
BoundsReport bounds_table(std::size_t n, std::size_t r, unsigned b,
                          const ChromaticComplex* c = nullptr);

}  // namespace bim
