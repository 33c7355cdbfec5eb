#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "permgen/perm.hpp"

namespace permgen {

/// Weakly decreasing sequence of positive integers. The empty partition
/// (of 0) is valid.
struct Partition {
  std::vector<uint32_t> parts;

  unsigned sum() const {
    unsigned s = 0;
    for (uint32_t p : parts) s += p;
    return s;
  }
  bool empty() const { return parts.empty(); }
  std::string to_string() const;  // "3+2+1", "-" for the empty partition

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;
};

/// All partitions of n in reverse-lexicographic order: (n) first, (1^n) last.
std::vector<Partition> partitions(unsigned n);

/// p(n), cached (Euler's pentagonal-number recurrence). By value: the cache
/// reallocates on growth.
BigInt partition_count(unsigned n);

Partition conjugate_partition(const Partition& lam);

/// Hook lengths of all cells, row-major.
std::vector<uint32_t> hook_lengths(const Partition& lam);

/// Border strip of r cells removable from the rim of a diagram.
struct RimHook {
  std::vector<std::pair<uint32_t, uint32_t>> cells;  // (row, col), 0-based
  uint32_t length = 0;
  uint32_t leg_length = 0;  // rows spanned minus one
  Partition remainder;
};

/// All r-rim hooks of lam, enumerated via first-column hook lengths (beta
/// numbers): each corresponds to a beta number b with b-r >= 0 not itself a
/// beta number. Empty when none exist.
std::vector<RimHook> rim_hooks(const Partition& lam, uint32_t r);

}  // namespace permgen
