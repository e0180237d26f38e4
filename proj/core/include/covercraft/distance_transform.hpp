#pragma once

// Full-cube distance tables.  Both transforms cost O(n * 2^n) time and
// one byte per word of Q_n; they back every exhaustive radius/norm scan.

#include <cstdint>
#include <vector>

namespace covercraft {

// 0xFF marks "unreachable"; finite hypercube distances never exceed 64.
inline constexpr std::uint8_t kUnreachable = 0xFF;

// dist[x] = min Hamming distance from x to any source mask
// (multi-source breadth-first search; all 0xFF when sources is empty).
std::vector<std::uint8_t> distance_table(unsigned n, const std::vector<std::uint64_t>& sources);

// dist[x] = min { d(x, s) : s a source, x precedes s }, the distance to
// the nearest dominating source.  Computed by a descending-mask sweep:
// every strict superset of x is numerically larger, so a single pass
// from 2^n - 1 down to 0 sees all one-bit supersets first.
std::vector<std::uint8_t> dominator_distance_table(unsigned n,
                                                   const std::vector<std::uint64_t>& sources);

}  // namespace covercraft
