#include "covercraft/distance_transform.hpp"

#include <stdexcept>

namespace covercraft {

namespace {

void check_n(unsigned n) {
    if (n < 1 || n > 30) throw std::invalid_argument("distance table length out of range");
}

}  // namespace

std::vector<std::uint8_t> distance_table(unsigned n, const std::vector<std::uint64_t>& sources) {
    check_n(n);
    const std::size_t size = std::size_t{1} << n;
    std::vector<std::uint8_t> dist(size, kUnreachable);
    if (sources.empty()) return dist;

    std::vector<std::uint32_t> frontier;
    frontier.reserve(sources.size());
    for (std::uint64_t s : sources) {
        if (dist[s] != 0) {
            dist[s] = 0;
            frontier.push_back(static_cast<std::uint32_t>(s));
        }
    }
    std::vector<std::uint32_t> next;
    std::uint8_t level = 0;
    while (!frontier.empty()) {
        ++level;
        next.clear();
        for (std::uint32_t x : frontier) {
            for (unsigned b = 0; b < n; ++b) {
                const std::uint32_t y = x ^ (1u << b);
                if (dist[y] == kUnreachable) {
                    dist[y] = level;
                    next.push_back(y);
                }
            }
        }
        frontier.swap(next);
    }
    return dist;
}

std::vector<std::uint8_t> dominator_distance_table(unsigned n,
                                                   const std::vector<std::uint64_t>& sources) {
    check_n(n);
    const std::size_t size = std::size_t{1} << n;
    std::vector<std::uint8_t> dist(size, kUnreachable);
    for (std::uint64_t s : sources) dist[s] = 0;
    if (sources.empty()) return dist;

    for (std::size_t i = size; i-- > 0;) {
        if (dist[i] == 0) continue;
        std::uint8_t best = kUnreachable;
        // Zero coordinates of i; raising one moves to a superset already
        // finalized by the descending sweep.
        std::uint64_t zeros = ~i & (size - 1);
        while (zeros != 0) {
            const std::uint64_t bit = zeros & (~zeros + 1);
            zeros ^= bit;
            const std::uint8_t up = dist[i | bit];
            if (up != kUnreachable && up + 1 < best) best = static_cast<std::uint8_t>(up + 1);
        }
        dist[i] = best;
    }
    return dist;
}

}  // namespace covercraft
