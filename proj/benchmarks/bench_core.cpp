#include <benchmark/benchmark.h>

#include "covercraft/constructions.hpp"
#include "covercraft/oracle.hpp"
#include "covercraft/patching.hpp"
#include "covercraft/radius_norm.hpp"
#include "covercraft/rng.hpp"

using namespace covercraft;

namespace {

Code random_code(unsigned n, std::size_t size, std::uint64_t seed) {
    SplitMix64 rng(seed);
    std::vector<std::uint64_t> masks;
    std::vector<bool> seen(std::size_t{1} << n, false);
    while (masks.size() < size) {
        const std::uint64_t m = rng.below(std::uint64_t{1} << n);
        if (!seen[m]) {
            seen[m] = true;
            masks.push_back(m);
        }
    }
    return Code(n, std::move(masks));
}

void CoveringRadius(benchmark::State& state) {
    const unsigned n = static_cast<unsigned>(state.range(0));
    const Code code = random_code(n, 1 + (std::size_t{1} << (n / 2)), 7);
    for (auto _ : state) {
        auto radius = covering_radius(code, 30);
        benchmark::DoNotOptimize(radius);
    }
    state.SetComplexityN(std::int64_t{1} << n);
}
BENCHMARK(CoveringRadius)->DenseRange(8, 18, 2)->Complexity();

void AsymNorm(benchmark::State& state) {
    const unsigned n = static_cast<unsigned>(state.range(0));
    const Code code = random_code(n, 1 + (std::size_t{1} << (n / 2)), 11);
    for (auto _ : state) {
        auto norm = asym_norm_at(code, n, 30);
        benchmark::DoNotOptimize(norm);
    }
}
BENCHMARK(AsymNorm)->DenseRange(8, 16, 2);

void BallEnumeration(benchmark::State& state) {
    const unsigned n = static_cast<unsigned>(state.range(0));
    const Word center(n, 0x559 & ((1u << n) - 1));
    for (auto _ : state) {
        Code ball = enumerate_ball(center, static_cast<int>(n / 3), BallKind::undirected);
        benchmark::DoNotOptimize(ball);
    }
}
BENCHMARK(BallEnumeration)->DenseRange(8, 16, 2);

void SamplePatched(benchmark::State& state) {
    PatchSampleParams params;
    params.n = static_cast<unsigned>(state.range(0));
    params.target_norm = 3;
    params.x = 4.0L;
    params.mode = Mode::symmetric;
    std::uint64_t seed = 0;
    for (auto _ : state) {
        params.seed = seed++;
        PatchedCode p = sample_patched(params, 30);
        benchmark::DoNotOptimize(p);
    }
}
BENCHMARK(SamplePatched)->DenseRange(8, 14, 2);

void AdsJoin(benchmark::State& state) {
    const Code a = random_code(10, 200, 3);
    const Code b = random_code(10, 200, 4);
    for (auto _ : state) {
        Code joined = ads_join(a, b);
        benchmark::DoNotOptimize(joined);
    }
}
BENCHMARK(AdsJoin);

void ExactSearch(benchmark::State& state) {
    const unsigned n = static_cast<unsigned>(state.range(0));
    for (auto _ : state) {
        SearchResult result = search_optimal(n, 1, Mode::symmetric, false);
        benchmark::DoNotOptimize(result);
    }
}
BENCHMARK(ExactSearch)->DenseRange(3, 5, 1);

}  // namespace

BENCHMARK_MAIN();
