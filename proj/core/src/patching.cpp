#include "covercraft/patching.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "covercraft/parallel.hpp"
#include "covercraft/rng.hpp"

namespace covercraft {

std::uint64_t SplitMix64::below(std::uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("uniform bound must be positive");
    const std::uint64_t threshold = (~bound + 1) % bound;  // 2^64 mod bound
    for (;;) {
        const std::uint64_t r = next();
        if (r >= threshold) return r % bound;
    }
}

std::vector<std::uint64_t> sample_k_subset(std::uint64_t universe, std::uint64_t k,
                                           SplitMix64& rng) {
    if (k > universe) throw std::invalid_argument("cannot sample more elements than the universe");
    std::vector<std::uint64_t> pool(universe);
    std::iota(pool.begin(), pool.end(), std::uint64_t{0});
    for (std::uint64_t j = 0; j < k; ++j) {
        const std::uint64_t swap_at = j + rng.below(universe - j);
        std::swap(pool[j], pool[swap_at]);
    }
    pool.resize(k);
    std::sort(pool.begin(), pool.end());
    return pool;
}

std::uint64_t derive_trial_seed(std::uint64_t master_seed, std::uint64_t trial_index) {
    SplitMix64 mixer(master_seed ^ (0xD1B54A32D192ED03ull * (trial_index + 1)));
    return mixer.next();
}

namespace {

void check_params(unsigned n, unsigned target_norm, long double x, Mode mode,
                  unsigned rare_radius) {
    if (n < 2 || n > kWordCapacity) throw std::invalid_argument("n must be in [2, 64]");
    if (target_norm < 1 || target_norm > n)
        throw std::invalid_argument("target norm must satisfy 1 <= N <= n");
    if (!(x > 0)) throw std::invalid_argument("density parameter x must be positive");
    if (mode == Mode::asymmetric && rare_radius < 1)
        throw std::invalid_argument("asymmetric mode requires R >= 1");
}

// Ball radii from the target norm: floor((N-1)/2) and ceil((N-1)/2)-1.
std::pair<int, int> denominator_radii(unsigned target_norm) {
    const int fl = static_cast<int>((target_norm - 1) / 2);
    const int ce = static_cast<int>(target_norm / 2) - 1;
    return {fl, ce};
}

// b_{n-1}(r) in symmetric mode; b+_{n-1}(w*, r) in asymmetric mode,
// w* = min(hi(n,R), n-1) being the largest realizable half-cube weight.
struct BallFamily {
    unsigned free_coords;  // n-1 symmetric; n-1-w* asymmetric

    std::uint64_t operator()(int r) const { return binom_sum(free_coords, r); }
};

BallFamily ball_family(unsigned n, Mode mode, unsigned rare_radius) {
    if (mode == Mode::symmetric) return {n - 1};
    const RareSpec spec = rare_spec(n, rare_radius);
    const unsigned w_star = std::min(spec.hi, n - 1);
    return {(n - 1) - w_star};
}

}  // namespace

RareSpec rare_spec(unsigned n, unsigned radius) {
    if (n < 2) throw std::invalid_argument("rare thresholds need n >= 2");
    const long double radical =
        std::sqrt(2.0L * (radius + 1) * static_cast<long double>(n) * std::log((long double)n));
    RareSpec spec;
    spec.n = n;
    spec.radius = radius;
    spec.hi = static_cast<unsigned>(
        std::min<long double>(n, std::floor((static_cast<long double>(n) + radical) / 2)));
    spec.lo = static_cast<unsigned>(
        std::max<long double>(0, std::ceil((static_cast<long double>(n) - radical) / 2)));
    return spec;
}

std::uint64_t rare_count(unsigned n, unsigned radius) {
    const RareSpec spec = rare_spec(n, radius);
    unsigned __int128 total = 0;
    for (unsigned w = 0; w < spec.lo; ++w) total += binom(n, w);
    for (unsigned w = spec.hi + 1; w <= n; ++w) total += binom(n, w);
    return static_cast<std::uint64_t>(total);
}

Code rare_set(unsigned n, unsigned radius, unsigned limit) {
    require_exhaustive(n, limit);
    const RareSpec spec = rare_spec(n, radius);
    std::vector<std::uint64_t> masks;
    const std::uint64_t size = std::uint64_t{1} << n;
    for (std::uint64_t x = 0; x < size; ++x) {
        const unsigned w = static_cast<unsigned>(std::popcount(x));
        if (w < spec.lo || w > spec.hi) masks.push_back(x);
    }
    return Code(n, std::move(masks));
}

long double rare_count_bound(unsigned n, unsigned radius) {
    return std::ldexp(1.0L, static_cast<int>(n) + 1) *
           std::pow(static_cast<long double>(n), -static_cast<long double>(radius) - 1);
}

std::uint64_t k_value(unsigned n, unsigned target_norm, long double x, Mode mode,
                      unsigned rare_radius) {
    check_params(n, target_norm, x, mode, rare_radius);
    const auto [fl, ce] = denominator_radii(target_norm);
    const BallFamily ball = ball_family(n, mode, rare_radius);
    const long double denom =
        static_cast<long double>(ball(fl)) + static_cast<long double>(ball(ce));
    const long double half = std::ldexp(1.0L, static_cast<int>(n) - 1);
    const long double raw = std::floor(x * half / denom);
    const std::uint64_t half_count = std::uint64_t{1} << (n - 1);
    if (raw >= static_cast<long double>(half_count)) return half_count;
    return static_cast<std::uint64_t>(raw);
}

long double tau(unsigned n, unsigned target_norm, long double x) {
    check_params(n, target_norm, x, Mode::symmetric, 0);
    const auto [fl, ce] = denominator_radii(target_norm);
    const BallFamily ball{n - 1};
    const long double denom =
        static_cast<long double>(ball(fl)) + static_cast<long double>(ball(ce));
    const long double half = std::ldexp(1.0L, static_cast<int>(n) - 1);
    const long double scale = std::ldexp(1.0L, static_cast<int>(n) + 1);

    long double sum = 0;
    const int N = static_cast<int>(target_norm);
    for (int i = 0; i < N; ++i) {
        const long double pair =
            static_cast<long double>(ball(i - 1)) + static_cast<long double>(ball(N - i - 1));
        sum += std::exp(-x * pair / denom + pair / half);
    }
    const long double tail = static_cast<long double>(ball(N - 1));
    sum += std::exp(-x * tail / denom + tail / half);
    return scale * sum;
}

long double tau_asym(unsigned n, unsigned target_norm, unsigned rare_radius, long double x) {
    check_params(n, target_norm, x, Mode::asymmetric, rare_radius);
    const auto [fl, ce] = denominator_radii(target_norm);
    const RareSpec spec = rare_spec(n, rare_radius);
    // Directed-ball families at the two worst realizable center weights:
    // min(hi, n-1) for the 0-half and hi-1 for the 1-half.
    const BallFamily at_hi{(n - 1) - std::min(spec.hi, n - 1)};
    const BallFamily below_hi{(n - 1) - std::min(spec.hi - 1, n - 1)};
    const long double denom =
        static_cast<long double>(at_hi(fl)) + static_cast<long double>(at_hi(ce));
    const long double half = std::ldexp(1.0L, static_cast<int>(n) - 1);
    const long double scale = std::ldexp(1.0L, static_cast<int>(n));

    long double bracket = 0;
    const int N = static_cast<int>(target_norm);
    for (int i = 0; i < N; ++i) {
        const long double pair =
            static_cast<long double>(at_hi(i - 1)) + static_cast<long double>(at_hi(N - i - 1));
        bracket += std::exp(-x * pair / denom + pair / half);
    }
    const long double long_ball = static_cast<long double>(at_hi(N - 1));
    const long double one_half_ball = static_cast<long double>(below_hi(fl));
    bracket += std::exp(-x * long_ball / denom + one_half_ball / half);

    const long double one_half_term = std::exp(-x * one_half_ball / denom + one_half_ball / half);
    return rare_count_bound(n, rare_radius) + scale * bracket + scale * one_half_term;
}

long double tau_asymptotic(unsigned n, unsigned target_norm, long double x) {
    const int shift = static_cast<int>(n) + (target_norm % 2 == 1 ? 2 : 1);
    return std::ldexp(std::exp(-x), shift);
}

long double tau_asym_asymptotic(unsigned n, unsigned target_norm, unsigned /*rare_radius*/,
                                long double x) {
    if (target_norm % 2 == 1) return 3.0L * std::ldexp(std::exp(-x), static_cast<int>(n));
    return std::ldexp(std::exp(-x) + std::exp(-x / 2), static_cast<int>(n));
}

long double patch_s_asym_asymptotic(unsigned n, unsigned target_norm, unsigned rare_radius,
                                    long double x) {
    // Directed balls at the worst non-rare weight behave like
    // (n/2)^R / R! for fixed R.
    const long double half_n = static_cast<long double>(n) / 2;
    if (target_norm % 2 == 1) {
        long double ball = 1;
        for (unsigned i = 1; i <= rare_radius; ++i) ball *= half_n / i;
        return x * std::ldexp(1.0L, static_cast<int>(n)) / ball;
    }
    long double ball = 1;
    for (unsigned i = 1; i + 1 <= rare_radius; ++i) ball *= half_n / i;
    return x * std::ldexp(1.0L, static_cast<int>(n) - 1) / ball;
}

long double patch_s_asymptotic(unsigned n, unsigned target_norm, long double x) {
    if (target_norm % 2 == 1) {
        const std::uint64_t ball = binom_sum(n - 1, static_cast<int>((target_norm - 1) / 2));
        return x * std::ldexp(1.0L, static_cast<int>(n)) / static_cast<long double>(ball);
    }
    const std::uint64_t ball = binom_sum(n - 1, static_cast<int>(target_norm / 2) - 1);
    return x * std::ldexp(1.0L, static_cast<int>(n) - 1) / static_cast<long double>(ball);
}

PatchedCode sample_patched(const PatchSampleParams& params, unsigned limit) {
    check_params(params.n, params.target_norm, params.x, params.mode, params.rare_radius);
    const unsigned n = params.n;
    require_exhaustive(n, limit);

    const std::uint64_t k =
        k_value(n, params.target_norm, params.x, params.mode, params.rare_radius);
    const std::uint64_t half_count = std::uint64_t{1} << (n - 1);

    // Coordinate n is bit 0, so the halves are the even and odd masks.
    SplitMix64 rng(params.seed);
    std::vector<std::uint64_t> s_masks;
    s_masks.reserve(2 * k);
    for (std::uint64_t idx : sample_k_subset(half_count, k, rng)) s_masks.push_back(idx << 1);
    for (std::uint64_t idx : sample_k_subset(half_count, k, rng))
        s_masks.push_back((idx << 1) | 1u);
    Code s(n, std::move(s_masks));

    const Code missed = missed_vectors(s, n, params.target_norm, params.mode, limit);

    std::vector<std::uint64_t> t_masks;
    if (params.mode == Mode::symmetric) {
        for (std::uint64_t m : missed.masks()) {
            t_masks.push_back(m);
            t_masks.push_back(m ^ 1u);
        }
    } else {
        const RareSpec spec = rare_spec(n, params.rare_radius);
        auto is_rare = [&](std::uint64_t m) {
            const unsigned w = static_cast<unsigned>(std::popcount(m));
            return w < spec.lo || w > spec.hi;
        };
        const std::uint64_t size = std::uint64_t{1} << n;
        for (std::uint64_t m = 0; m < size; ++m)
            if (is_rare(m)) t_masks.push_back(m);
        for (std::uint64_t m : missed.masks()) {
            if (!is_rare(m)) {
                t_masks.push_back(m);
                t_masks.push_back(m ^ 1u);
            } else if ((m & 1u) == 0) {
                // A missed rare 0-half word needs its flip partner in T
                // as well; the rare set alone does not guarantee it.
                t_masks.push_back(m ^ 1u);
            }
        }
    }
    std::sort(t_masks.begin(), t_masks.end());
    t_masks.erase(std::unique(t_masks.begin(), t_masks.end()), t_masks.end());

    PatchedCode patched;
    patched.s = std::move(s);
    patched.t = Code(n, std::move(t_masks));
    patched.coordinate = n;
    patched.target_norm = params.target_norm;
    patched.mode = params.mode;
    return patched;
}

PatchEstimate estimate_patch(const PatchSampleParams& params, std::uint64_t trials,
                             unsigned limit) {
    if (trials == 0) throw std::invalid_argument("trials must be positive");
    // Validate up front; exceptions must not originate inside workers.
    require_exhaustive(params.n, limit);
    const std::uint64_t k =
        k_value(params.n, params.target_norm, params.x, params.mode, params.rare_radius);
    std::vector<std::uint64_t> t_sizes(trials, 0);
    std::vector<std::uint8_t> invalid(trials, 0);
    parallel_chunks(trials, [&](std::size_t begin, std::size_t end) {
        for (std::size_t t = begin; t < end; ++t) {
            PatchSampleParams trial = params;
            trial.seed = derive_trial_seed(params.seed, t);
            const PatchedCode p = sample_patched(trial, limit);
            t_sizes[t] = p.t.size();
            if (!check_norm_patched(p, limit).valid) invalid[t] = 1;
        }
    });

    PatchEstimate est;
    est.trials = trials;
    est.k = k;
    est.s_size = 2 * est.k;
    long double sum = 0;
    for (std::uint64_t v : t_sizes) {
        sum += static_cast<long double>(v);
        est.max_t = std::max(est.max_t, v);
    }
    est.mean_t = sum / static_cast<long double>(trials);
    if (trials > 1) {
        long double ss = 0;
        for (std::uint64_t v : t_sizes) {
            const long double d = static_cast<long double>(v) - est.mean_t;
            ss += d * d;
        }
        est.stddev_t = std::sqrt(ss / static_cast<long double>(trials - 1));
    }
    est.tau_reference = params.mode == Mode::symmetric
                            ? tau(params.n, params.target_norm, params.x)
                            : tau_asym(params.n, params.target_norm, params.rare_radius, params.x);
    est.all_valid = std::find(invalid.begin(), invalid.end(), 1) == invalid.end();
    return est;
}

}  // namespace covercraft
