#pragma once

// Seeded, reproducible randomness: SplitMix64 streams plus exact
// uniform k-subset sampling via partial Fisher-Yates.  Every experiment
// in the library derives its randomness from an explicit 64-bit seed,
// and per-trial seeds are pure functions of (master seed, trial index),
// so results are independent of scheduling and worker count.

#include <cstdint>
#include <vector>

namespace covercraft {

class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    // Unbiased uniform draw from [0, bound) by rejection.
    std::uint64_t below(std::uint64_t bound);

private:
    std::uint64_t state_;
};

// Uniformly random k-subset of {0, ..., universe-1}, returned sorted.
// Partial Fisher-Yates over the index array: exact uniformity, O(universe)
// memory, O(universe + k) time.
std::vector<std::uint64_t> sample_k_subset(std::uint64_t universe, std::uint64_t k,
                                           SplitMix64& rng);

// Deterministic per-trial seed stream.
std::uint64_t derive_trial_seed(std::uint64_t master_seed, std::uint64_t trial_index);

}  // namespace covercraft
