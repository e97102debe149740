#pragma once

#include <cstdint>
#include <vector>

namespace bim {

/// Every ordered set partition of {0..k-1}, as the block rank of each element
/// (ranks are 0-based and contiguous).
std::vector<std::vector<std::uint32_t>> ordered_partitions(std::size_t k);

/// Ordered Bell (Fubini) number.
std::uint64_t fubini(std::size_t k);

std::uint64_t factorial(std::size_t k);

}  // namespace bim
