#pragma once

// Exact and greedy search for small optimal covering codes, providing
// K(n,R), K+(n,R) and their normal-restricted variants as ground truth
// for the recursive construction.

#include <cstdint>
#include <optional>

#include "covercraft/hypercube.hpp"

namespace covercraft {

// Hard cap of the exact searcher: universes are kept in a 128-bit mask.
inline constexpr unsigned kExactSearchLimit = 7;

struct SearchBudget {
    std::uint64_t max_nodes = 50'000'000;
};

struct SearchResult {
    unsigned n = 0;
    unsigned radius = 0;
    Mode mode = Mode::symmetric;
    std::uint64_t optimum = 0;
    std::optional<Code> witness;  // lexicographically least optimal code (within budget)
    bool exhaustive = false;      // optimum provably exact
    std::uint64_t nodes = 0;

    std::optional<std::uint64_t> normal_optimum;  // request with require_normal
    std::optional<Code> normal_witness;
    bool normal_exhaustive = false;
};

// Depth-first branch and bound on the uncovered-word count with lower
// bound ceil(uncovered / ball size).  Symmetric instances fix the
// lexicographically least codeword to the zero word (its orbit under
// coordinate permutation and complementation covers every word);
// asymmetric instances seed the all-ones word, which every downward
// cover must contain.  Witnesses follow the deterministic tie-break:
// the lexicographically least code, found by an increasing-order
// enumeration at the proven optimum size.  Normal-restricted optima are
// found by filtering complete covers of growing size through is_normal
// (norms are not monotone under codeword addition, so they cannot prune
// the branch and bound soundly).
//
// Budget exhaustion returns the best found with exhaustive=false; a
// length above kExactSearchLimit is rejected.
SearchResult search_optimal(unsigned n, unsigned radius, Mode mode, bool require_normal,
                            SearchBudget budget = {});

// Standard greedy set cover over (directed) R-balls; ties broken toward
// the lexicographically least center.  The returned code has verified
// covering radius at most R.  Cost is O(|C| * 2^n * ball).
Code greedy_cover(unsigned n, unsigned radius, Mode mode,
                  unsigned limit = kDefaultExhaustiveLimit);

}  // namespace covercraft
