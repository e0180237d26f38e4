#include "naive.hpp"

#include <quadmath.h>

#include <bit>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace naive {

namespace {

using covercraft::Code;
using covercraft::ExtendedNat;
using covercraft::Mode;

constexpr int kFar = 1 << 20;  // larger than any finite hypercube distance

int dist_to(const std::vector<std::uint64_t>& members, std::uint64_t x) {
    int best = kFar;
    for (std::uint64_t m : members) best = std::min(best, std::popcount(x ^ m));
    return best;
}

int up_dist_to(const std::vector<std::uint64_t>& members, std::uint64_t x) {
    int best = kFar;
    for (std::uint64_t m : members)
        if ((x & ~m) == 0) best = std::min(best, std::popcount(x ^ m));
    return best;
}

ExtendedNat as_nat(int v) {
    return v >= kFar ? ExtendedNat::infinity() : ExtendedNat(static_cast<std::uint64_t>(v));
}

std::pair<std::vector<std::uint64_t>, std::vector<std::uint64_t>> halves(const Code& c,
                                                                         unsigned coordinate) {
    std::pair<std::vector<std::uint64_t>, std::vector<std::uint64_t>> out;
    const unsigned shift = c.length() - coordinate;
    for (std::uint64_t m : c.masks()) (((m >> shift) & 1u) ? out.second : out.first).push_back(m);
    return out;
}

}  // namespace

ExtendedNat covering_radius(const Code& c) {
    if (c.empty()) return ExtendedNat::infinity();
    int worst = 0;
    for (std::uint64_t x = 0; x < (std::uint64_t{1} << c.length()); ++x)
        worst = std::max(worst, dist_to(c.masks(), x));
    return as_nat(worst);
}

ExtendedNat asym_covering_radius(const Code& c) {
    if (c.empty()) return ExtendedNat::infinity();
    int worst = 0;
    for (std::uint64_t x = 0; x < (std::uint64_t{1} << c.length()); ++x)
        worst = std::max(worst, up_dist_to(c.masks(), x));
    return as_nat(worst);
}

ExtendedNat norm_at(const Code& c, unsigned coordinate) {
    const auto [c0, c1] = halves(c, coordinate);
    int worst = 0;
    for (std::uint64_t x = 0; x < (std::uint64_t{1} << c.length()); ++x)
        worst = std::max(worst, dist_to(c0, x) + dist_to(c1, x));
    return worst >= kFar ? ExtendedNat::infinity() : ExtendedNat(worst);
}

ExtendedNat asym_norm_at(const Code& c, unsigned coordinate) {
    const auto [c0, c1] = halves(c, coordinate);
    const unsigned shift = c.length() - coordinate;
    int worst = 0;
    for (std::uint64_t x = 0; x < (std::uint64_t{1} << c.length()); ++x) {
        const int value = ((x >> shift) & 1u) ? 2 * up_dist_to(c1, x) + 1
                                              : up_dist_to(c0, x) + up_dist_to(c1, x);
        worst = std::max(worst, value);
    }
    return worst >= kFar ? ExtendedNat::infinity() : ExtendedNat(worst);
}

std::uint64_t optimal_cover_size(unsigned n, unsigned radius, Mode mode) {
    if (n > 5) throw std::invalid_argument("subset enumeration oracle is limited to n <= 5");
    const std::uint32_t size = 1u << n;
    const std::uint32_t full = (n == 5) ? 0xFFFFFFFFu : ((1u << size) - 1);

    std::vector<std::uint32_t> cover(size, 0);
    for (std::uint32_t c = 0; c < size; ++c)
        for (std::uint32_t y = 0; y < size; ++y) {
            if (static_cast<unsigned>(std::popcount(c ^ y)) > radius) continue;
            if (mode == Mode::asymmetric && (y & ~c) != 0) continue;
            cover[c] |= 1u << y;
        }

    for (std::uint32_t s = 1; s <= size; ++s) {
        // Lexicographic enumeration of all s-combinations of {0..size-1}.
        std::vector<std::uint32_t> pick(s);
        for (std::uint32_t i = 0; i < s; ++i) pick[i] = i;
        for (;;) {
            std::uint32_t mask = 0;
            for (std::uint32_t c : pick) mask |= cover[c];
            if (mask == full) return s;
            // next combination
            int i = static_cast<int>(s) - 1;
            while (i >= 0 && pick[i] == size - s + i) --i;
            if (i < 0) break;
            ++pick[i];
            for (std::uint32_t j = i + 1; j < s; ++j) pick[j] = pick[j - 1] + 1;
        }
    }
    throw std::logic_error("full cube failed to cover itself");
}

namespace {

__float128 qbinom_sum(unsigned n, int r) {
    if (r < 0) return 0;
    __float128 acc = 0;
    __float128 term = 1;
    for (int i = 0; i <= r && i <= static_cast<int>(n); ++i) {
        if (i > 0) term = term * (n - i + 1) / i;
        acc += term;
    }
    return acc;
}

__float128 qpow2(int e) { return powq(2, e); }

}  // namespace

long double tau_hiprec(unsigned n, unsigned target_norm, long double x) {
    const int N = static_cast<int>(target_norm);
    const __float128 xf = x;
    const __float128 denom = qbinom_sum(n - 1, (N - 1) / 2) + qbinom_sum(n - 1, N / 2 - 1);
    const __float128 half = qpow2(static_cast<int>(n) - 1);
    __float128 total = 0;
    for (int i = 0; i <= N; ++i) {
        const __float128 pair = (i < N)
                                    ? qbinom_sum(n - 1, i - 1) + qbinom_sum(n - 1, N - i - 1)
                                    : qbinom_sum(n - 1, N - 1);
        total += expq(-xf * pair / denom + pair / half);
    }
    return static_cast<long double>(qpow2(static_cast<int>(n) + 1) * total);
}

long double tau_asym_hiprec(unsigned n, unsigned target_norm, unsigned rare_radius,
                            long double x) {
    const int N = static_cast<int>(target_norm);
    const __float128 xf = x;
    const long double radical =
        std::sqrt(2.0L * (rare_radius + 1) * static_cast<long double>(n) *
                  std::log(static_cast<long double>(n)));
    const unsigned hi = static_cast<unsigned>(
        std::min<long double>(n, std::floor((static_cast<long double>(n) + radical) / 2)));
    const unsigned w0 = std::min(hi, n - 1);

    auto ball0 = [&](int r) { return qbinom_sum((n - 1) - w0, r); };
    auto ball1 = [&](int r) { return qbinom_sum(n - std::min(hi, n), r); };  // weight hi-1

    const __float128 denom = ball0((N - 1) / 2) + ball0(N / 2 - 1);
    const __float128 half = qpow2(static_cast<int>(n) - 1);
    const __float128 scale = qpow2(static_cast<int>(n));
    const __float128 rare = qpow2(static_cast<int>(n) + 1) *
                            powq(static_cast<__float128>(n),
                                 -(static_cast<__float128>(rare_radius) + 1));

    __float128 bracket = 0;
    for (int i = 0; i < N; ++i) {
        const __float128 pair = ball0(i - 1) + ball0(N - i - 1);
        bracket += expq(-xf * pair / denom + pair / half);
    }
    const __float128 half_up = ball1((N - 1) / 2);
    bracket += expq(-xf * ball0(N - 1) / denom + half_up / half);

    const __float128 tail = expq(-xf * half_up / denom + half_up / half);
    return static_cast<long double>(rare + scale * bracket + scale * tail);
}

}  // namespace naive
