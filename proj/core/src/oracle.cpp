#include "covercraft/oracle.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "covercraft/radius_norm.hpp"

namespace covercraft {

namespace {

using U128 = unsigned __int128;

unsigned popcount128(U128 v) {
    return static_cast<unsigned>(std::popcount(static_cast<std::uint64_t>(v)) +
                                 std::popcount(static_cast<std::uint64_t>(v >> 64)));
}

unsigned lowest_bit128(U128 v) {
    const std::uint64_t low = static_cast<std::uint64_t>(v);
    if (low != 0) return static_cast<unsigned>(std::countr_zero(low));
    return 64 + static_cast<unsigned>(std::countr_zero(static_cast<std::uint64_t>(v >> 64)));
}

// Words covered by choosing center c: the undirected ball (symmetric)
// or the downward directed ball (asymmetric).
std::vector<U128> cover_masks(unsigned n, unsigned radius, Mode mode) {
    const std::uint32_t size = 1u << n;
    std::vector<U128> cover(size, 0);
    for (std::uint32_t c = 0; c < size; ++c) {
        for (std::uint32_t y = 0; y < size; ++y) {
            const unsigned d = static_cast<unsigned>(std::popcount(c ^ y));
            if (d > radius) continue;
            if (mode == Mode::asymmetric && (y & ~c) != 0) continue;  // need y below c
            cover[c] |= U128{1} << y;
        }
    }
    return cover;
}

struct Searcher {
    unsigned n;
    unsigned radius;
    Mode mode;
    std::uint32_t size;
    U128 full;
    std::vector<U128> cover;
    std::vector<std::vector<std::uint32_t>> coverers;  // candidates covering each word
    std::vector<std::uint32_t> max_coverer;
    std::uint64_t max_ball = 1;

    std::uint64_t nodes = 0;
    std::uint64_t max_nodes = 0;
    bool budget_ok = true;

    Searcher(unsigned n_, unsigned radius_, Mode mode_, std::uint64_t max_nodes_)
        : n(n_), radius(radius_), mode(mode_), size(1u << n_), max_nodes(max_nodes_) {
        full = size == 128 ? ~U128{0} : ((U128{1} << size) - 1);
        cover = cover_masks(n, radius, mode);
        coverers.resize(size);
        max_coverer.assign(size, 0);
        for (std::uint32_t c = 0; c < size; ++c) {
            max_ball = std::max<std::uint64_t>(max_ball, popcount128(cover[c]));
            for (std::uint32_t u = 0; u < size; ++u)
                if ((cover[c] >> u) & 1) {
                    coverers[u].push_back(c);
                    max_coverer[u] = std::max(max_coverer[u], c);
                }
        }
    }

    bool tick() {
        if (++nodes > max_nodes) budget_ok = false;
        return budget_ok;
    }

    // Branch and bound for the minimum cover size; branches on the
    // lexicographically least uncovered word.
    void bnb(U128 uncovered, std::vector<std::uint32_t>& chosen,
             std::vector<std::uint32_t>& best) {
        if (!tick()) return;
        if (uncovered == 0) {
            if (best.empty() || chosen.size() < best.size()) best = chosen;
            return;
        }
        const std::uint64_t lower =
            (popcount128(uncovered) + max_ball - 1) / max_ball;
        if (!best.empty() && chosen.size() + lower >= best.size()) return;
        const unsigned u = lowest_bit128(uncovered);
        for (std::uint32_t c : coverers[u]) {
            chosen.push_back(c);
            bnb(uncovered & ~cover[c], chosen, best);
            chosen.pop_back();
            if (!budget_ok) return;
        }
    }

    // Every uncovered word must still be coverable by a candidate at or
    // above `floor`.
    bool reachable(U128 uncovered, std::uint32_t floor) const {
        U128 rest = uncovered;
        while (rest != 0) {
            const unsigned u = lowest_bit128(rest);
            if (max_coverer[u] < floor) return false;
            rest &= rest - 1;
        }
        return true;
    }

    // Enumerates covers c_1 < c_2 < ... < c_target in lexicographic
    // order; the first one accepted is the lexicographically least.
    // `accept` may filter (e.g. by normality); returning false keeps
    // the enumeration going.  A word adding nothing over the prefix is
    // redundant in the whole cover, and a size-s cover holds at most
    // s - optimum redundant words, so zero-gain picks draw down `slack`.
    template <typename Accept>
    bool lex_covers(U128 uncovered, std::uint32_t floor, unsigned remaining, unsigned slack,
                    std::vector<std::uint32_t>& chosen, Accept&& accept) {
        if (!tick()) return false;
        if (remaining == 0) return uncovered == 0 && accept(chosen);
        const std::uint64_t lower = (popcount128(uncovered) + max_ball - 1) / max_ball;
        if (lower > remaining) return false;
        if (!reachable(uncovered, floor)) return false;
        if (size - floor < remaining) return false;
        for (std::uint32_t c = floor; c < size; ++c) {
            const bool gains = (cover[c] & uncovered) != 0;
            if (!gains && slack == 0) continue;
            chosen.push_back(c);
            if (lex_covers(uncovered & ~cover[c], c + 1, remaining - 1,
                           gains ? slack : slack - 1, chosen, accept))
                return true;
            chosen.pop_back();
            if (!budget_ok) return false;
        }
        return false;
    }
};

Code to_code(unsigned n, const std::vector<std::uint32_t>& masks) {
    std::vector<std::uint64_t> sorted(masks.begin(), masks.end());
    std::sort(sorted.begin(), sorted.end());
    return Code(n, std::move(sorted));
}

}  // namespace

Code greedy_cover(unsigned n, unsigned radius, Mode mode, unsigned limit) {
    require_exhaustive(n, limit);
    if (n > 30) throw std::invalid_argument("greedy cover length out of range");
    const std::uint64_t size = std::uint64_t{1} << n;
    std::vector<std::uint8_t> covered(size, 0);
    std::uint64_t covered_count = 0;
    std::vector<std::uint64_t> chosen;

    // Gain of a candidate = newly covered words in its (directed) ball.
    auto ball_of = [&](std::uint64_t c, auto&& visit) {
        for (std::uint64_t y = 0; y < size; ++y) {
            if (static_cast<unsigned>(std::popcount(c ^ y)) > radius) continue;
            if (mode == Mode::asymmetric && (y & ~c) != 0) continue;
            visit(y);
        }
    };

    while (covered_count < size) {
        std::uint64_t best_c = 0;
        std::uint64_t best_gain = 0;
        for (std::uint64_t c = 0; c < size; ++c) {
            std::uint64_t gain = 0;
            ball_of(c, [&](std::uint64_t y) { gain += covered[y] == 0; });
            if (gain > best_gain) {
                best_gain = gain;
                best_c = c;
            }
        }
        if (best_gain == 0) throw std::logic_error("greedy cover stalled");
        chosen.push_back(best_c);
        ball_of(best_c, [&](std::uint64_t y) {
            covered_count += covered[y] == 0;
            covered[y] = 1;
        });
    }
    return Code(n, std::move(chosen));
}

SearchResult search_optimal(unsigned n, unsigned radius, Mode mode, bool require_normal,
                            SearchBudget budget) {
    if (n < 1 || n > kExactSearchLimit) throw limit_error(n, kExactSearchLimit);
    if (radius > n) throw std::invalid_argument("radius exceeds length");

    SearchResult result;
    result.n = n;
    result.radius = radius;
    result.mode = mode;

    Searcher searcher(n, radius, mode, budget.max_nodes);

    // Greedy incumbent.
    const Code greedy = greedy_cover(n, radius, mode);
    std::vector<std::uint32_t> best;
    for (std::uint64_t m : greedy.masks()) best.push_back(static_cast<std::uint32_t>(m));

    // Seed word: the zero word for symmetric instances (any optimal code
    // translates onto it), the forced all-ones word for asymmetric ones.
    const std::uint32_t seed_word =
        mode == Mode::symmetric ? 0u : static_cast<std::uint32_t>(searcher.size - 1);
    std::vector<std::uint32_t> chosen{seed_word};
    searcher.bnb(searcher.full & ~searcher.cover[seed_word], chosen, best);
    result.optimum = best.size();
    result.exhaustive = searcher.budget_ok;

    // Lexicographically least witness at the optimum size.
    {
        std::vector<std::uint32_t> acc;
        U128 uncovered = searcher.full;
        std::uint32_t floor = 0;
        unsigned remaining = static_cast<unsigned>(result.optimum);
        if (mode == Mode::symmetric) {
            acc.push_back(0);
            uncovered &= ~searcher.cover[0];
            floor = 1;
            --remaining;
        }
        const bool found = searcher.lex_covers(uncovered, floor, remaining, 0, acc,
                                               [](const std::vector<std::uint32_t>&) {
                                                   return true;
                                               });
        result.witness = to_code(n, found ? acc : best);
    }

    if (require_normal) {
        for (std::uint64_t s = result.optimum; s <= (std::uint64_t{1} << n); ++s) {
            std::vector<std::uint32_t> acc;
            U128 uncovered = searcher.full;
            std::uint32_t floor = 0;
            unsigned remaining = static_cast<unsigned>(s);
            if (mode == Mode::symmetric) {
                acc.push_back(0);
                uncovered &= ~searcher.cover[0];
                floor = 1;
                --remaining;
            }
            const unsigned slack = static_cast<unsigned>(s - result.optimum);
            const bool found = searcher.lex_covers(
                uncovered, floor, remaining, slack, acc,
                [&](const std::vector<std::uint32_t>& words) {
                    const Code candidate = to_code(n, words);
                    // A normal (n,R)-code has covering radius exactly R.
                    const NormalityCheck check = is_normal(candidate, ExtendedNat(radius), mode);
                    return check.radius_matches && check.normal;
                });
            if (found) {
                result.normal_optimum = s;
                result.normal_witness = to_code(n, acc);
                result.normal_exhaustive = searcher.budget_ok;
                break;
            }
            if (!searcher.budget_ok) break;
        }
    }

    // result.exhaustive reflects the branch-and-bound phase alone: a
    // later witness or normality pass running out of budget leaves the
    // proven optimum exact.
    result.nodes = searcher.nodes;
    return result;
}

}  // namespace covercraft
