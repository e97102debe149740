#include "bim/combinatorics.hpp"

namespace bim {

namespace {

void extend(std::size_t k, std::uint32_t rank, std::uint32_t remaining_mask,
            std::vector<std::uint32_t>& current, std::vector<std::vector<std::uint32_t>>& out) {
  if (remaining_mask == 0) {
    out.push_back(current);
    return;
  }
  // Next block: any nonempty subset of what is left.
  for (std::uint32_t block = remaining_mask; block != 0; block = (block - 1) & remaining_mask) {
    for (std::size_t i = 0; i < k; ++i) {
      if (block & (1u << i)) current[i] = rank;
    }
    extend(k, rank + 1, remaining_mask & ~block, current, out);
  }
}

}  // namespace

std::vector<std::vector<std::uint32_t>> ordered_partitions(std::size_t k) {
  std::vector<std::vector<std::uint32_t>> out;
  std::vector<std::uint32_t> current(k, 0);
  extend(k, 0, (k >= 32) ? ~0u : ((1u << k) - 1u), current, out);
  return out;
}

std::uint64_t fubini(std::size_t k) {
  // a(k) = sum_{j=1..k} C(k, j) a(k - j)
  std::vector<std::uint64_t> a(k + 1, 0);
  a[0] = 1;
  for (std::size_t m = 1; m <= k; ++m) {
    std::uint64_t binom = 1;
    for (std::size_t j = 1; j <= m; ++j) {
      binom = binom * (m - j + 1) / j;
      a[m] += binom * a[m - j];
    }
  }
  return a[k];
}

std::uint64_t factorial(std::size_t k) {
  std::uint64_t f = 1;
  for (std::size_t i = 2; i <= k; ++i) f *= i;
  return f;
}

}  // namespace bim
