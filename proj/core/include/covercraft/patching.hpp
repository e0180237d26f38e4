#pragma once

// The probabilistic deletion method: sampling balanced norm-patched
// codes, the closed-form patch expectation bounds tau and tau_plus,
// rare-vector machinery, and a Monte Carlo estimation harness.

#include <cstdint>

#include "covercraft/hypercube.hpp"
#include "covercraft/radius_norm.hpp"

namespace covercraft {

struct PatchSampleParams {
    unsigned n = 0;            // word length
    unsigned target_norm = 0;  // N, 1 <= N <= n
    long double x = 0;         // positive density parameter
    unsigned rare_radius = 0;  // R; drives rare-vector thresholds (asymmetric mode)
    std::uint64_t seed = 0;
    Mode mode = Mode::symmetric;
};

// Weight window of the non-rare band:
//   hi = min{n, floor((n + sqrt(2(R+1) n ln n)) / 2)}
//   lo = max{0, ceil ((n - sqrt(2(R+1) n ln n)) / 2)}
struct RareSpec {
    unsigned n = 0;
    unsigned radius = 0;
    unsigned hi = 0;
    unsigned lo = 0;
};

RareSpec rare_spec(unsigned n, unsigned radius);

// |{u : w(u) < lo or w(u) > hi}|, by exact binomial sums.
std::uint64_t rare_count(unsigned n, unsigned radius);

// The rare words themselves (exhaustive; length-capped).
Code rare_set(unsigned n, unsigned radius, unsigned limit = kDefaultExhaustiveLimit);

// Chernoff-derived cap 2^{n+1} n^{-R-1} on the rare count.
long double rare_count_bound(unsigned n, unsigned radius);

// Number of words drawn into each coordinate-n half:
//   k = floor( x 2^{n-1} / (b_{n-1}(floor((N-1)/2)) + b_{n-1}(ceil((N-1)/2)-1)) ),
// with directed-ball denominators b+_{n-1}(w*, .) in asymmetric mode,
// where w* = min(hi(n,R), n-1) is the largest weight a half-cube word
// can actually have.  The result is clamped to the half-cube size
// 2^{n-1}: the patch bounds hold for any selection of at most that many
// words per half, and parameters pushing the floor past the half-cube
// simply select the whole half.
std::uint64_t k_value(unsigned n, unsigned target_norm, long double x, Mode mode,
                      unsigned rare_radius = 0);

// Closed-form bound on the expected patch size, symmetric case:
//   tau(n,N,x) = 2^{n+1} sum_{i=0}^{N-1} exp(-x (b(i-1)+b(N-i-1))/D + (b(i-1)+b(N-i-1))/2^{n-1})
//              + 2^{n+1} exp(-x b(N-1)/D + b(N-1)/2^{n-1})
// with b(r) = b_{n-1}(r) and D the k-value denominator.  Strictly
// decreasing in x; the +ball/2^{n-1} terms absorb the floor in k.
long double tau(unsigned n, unsigned target_norm, long double x);

// Asymmetric counterpart with directed balls at the worst non-rare
// weight and the leading rare-vector term instantiated as
// 2^{n+1} n^{-R-1}.
long double tau_asym(unsigned n, unsigned target_norm, unsigned rare_radius, long double x);

// Limit shapes of tau and of |S| for fixed N as n grows; reference
// evaluators only (the sampler always uses the exact expressions).
long double tau_asymptotic(unsigned n, unsigned target_norm, long double x);
long double tau_asym_asymptotic(unsigned n, unsigned target_norm, unsigned rare_radius,
                                long double x);
long double patch_s_asymptotic(unsigned n, unsigned target_norm, long double x);
long double patch_s_asym_asymptotic(unsigned n, unsigned target_norm, unsigned rare_radius,
                                    long double x);

// Draws S_0, S_1 (each of size k) uniformly from the coordinate-n
// halves and collects every missed word into the patch T:
//   symmetric   T = missed + {0, e_n}            (closed under the flip)
//   asymmetric  T = Q_rare  union  (missed non-rare + {0, e_n})
//                   union the e_n-partners of missed rare 0-half words,
// so that check_norm_patched always passes.  Deterministic in the seed.
PatchedCode sample_patched(const PatchSampleParams& params,
                           unsigned limit = kDefaultExhaustiveLimit);

struct PatchEstimate {
    std::uint64_t trials = 0;
    std::uint64_t k = 0;
    std::uint64_t s_size = 0;       // |S| = 2k, identical across trials
    long double mean_t = 0;         // mean |T|
    long double stddev_t = 0;       // sample standard deviation of |T|
    std::uint64_t max_t = 0;
    long double tau_reference = 0;  // tau / tau_asym at the same parameters
    bool all_valid = false;         // every sample passed check_norm_patched
};

// Runs `trials` independent samples with per-trial seeds derived from
// (params.seed, trial index); bit-identical across reruns and thread
// counts.
PatchEstimate estimate_patch(const PatchSampleParams& params, std::uint64_t trials,
                             unsigned limit = kDefaultExhaustiveLimit);

}  // namespace covercraft
