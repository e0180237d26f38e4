#include "doctest.h"

#include <set>

#include "covercraft/constructions.hpp"
#include "covercraft/density.hpp"
#include "covercraft/rng.hpp"

using namespace covercraft;

namespace {

Word w(const char* s) { return Word::from_string(s); }

Code random_nonempty(unsigned n, std::size_t max_size, SplitMix64& rng) {
    std::set<std::uint64_t> picked;
    const std::uint64_t space = std::uint64_t{1} << n;
    const std::size_t want = 1 + rng.below(max_size);
    while (picked.size() < std::min<std::size_t>(want, space))
        picked.insert(rng.below(space));
    return Code(n, {picked.begin(), picked.end()});
}

// Draws random codes until one is normal in `mode` with the requested
// glue coordinate acceptable; small n keeps this cheap.
Code random_normal_with_glue(unsigned n, unsigned glue, Mode mode, SplitMix64& rng) {
    for (;;) {
        const Code c = random_nonempty(n, 8, rng);
        const ExtendedNat radius =
            mode == Mode::symmetric ? covering_radius(c) : asym_covering_radius(c);
        if (radius.is_infinite()) continue;
        if (!is_normal(c, radius, mode).normal) continue;
        if (norm_at(c, glue, mode) <= ExtendedNat(2 * radius.finite() + 1)) return c;
    }
}

}  // namespace

TEST_CASE("direct sum is the Cartesian concatenation") {
    const Code a = Code::from_words({w("000"), w("111")});
    const Code b = Code::from_words({w("000"), w("111")});
    const Code sum = direct_sum(a, b);
    CHECK(sum.length() == 6);
    CHECK(sum.size() == 4);
    CHECK(covering_radius(sum) == ExtendedNat(2));

    // Prefixing with the one-word code {0} shifts every word and adds
    // that code's radius (1); prefixing with the radius-0 code Q_1
    // leaves the radius unchanged.
    const Code prefixed = direct_sum(Code::from_words({w("0")}), b);
    CHECK(prefixed == Code::from_words({w("0000"), w("0111")}));
    CHECK(covering_radius(prefixed) == covering_radius(b) + ExtendedNat(1));
    CHECK(covering_radius(direct_sum(Code::full_cube(1), b)) == covering_radius(b));

    CHECK_THROWS_AS(direct_sum(Code(2), b), std::invalid_argument);
}

TEST_CASE("direct sum radius is at most the sum of radii, both modes") {
    SplitMix64 rng(31);
    for (int trial = 0; trial < 150; ++trial) {
        const unsigned na = 2 + static_cast<unsigned>(rng.below(4));
        const unsigned nb = 2 + static_cast<unsigned>(rng.below(4));
        const Code a = random_nonempty(na, 6, rng);
        const Code b = random_nonempty(nb, 6, rng);
        const Code sum = direct_sum(a, b);
        CHECK(sum.size() == a.size() * b.size());

        const ExtendedNat ra = covering_radius(a), rb = covering_radius(b);
        CHECK(covering_radius(sum) <= ra + rb);
        const ExtendedNat pa = asym_covering_radius(a), pb = asym_covering_radius(b);
        if (!pa.is_infinite() && !pb.is_infinite())
            CHECK(asym_covering_radius(sum) <= pa + pb);
    }
}

TEST_CASE("ads of the two-word repetition codes") {
    const Code rep3 = Code::from_words({w("000"), w("111")});
    const Code result = ads(rep3, rep3, Mode::symmetric);
    CHECK(result == Code::from_words({w("00000"), w("11111")}));
    CHECK(norm_at(result, 3) <= ExtendedNat(5));
}

TEST_CASE("ads size accounting") {
    // Balanced operands: |A| * |B| / 2.
    const Code a = Code::from_words({w("000"), w("111")});
    const Code b = Code::from_words({w("000"), w("111")});
    CHECK(ads(a, b, Mode::symmetric).size() == a.size() * b.size() / 2);

    // One-sided halves glue into a pure product on the 0 branch.
    const Code a0 = Code::from_words({w("00"), w("10")});
    const Code b0 = Code::from_words({w("00"), w("01")});
    const Code joined = ads_join(a0, b0);
    CHECK(joined.size() == 4);
    CHECK(joined == Code::from_words({w("000"), w("001"), w("100"), w("101")}));

    // General branch counting.
    SplitMix64 rng(32);
    for (int trial = 0; trial < 100; ++trial) {
        const unsigned na = 2 + static_cast<unsigned>(rng.below(3));
        const unsigned nb = 2 + static_cast<unsigned>(rng.below(3));
        const Code x = random_nonempty(na, 8, rng);
        const Code y = random_nonempty(nb, 8, rng);
        const std::size_t expect = half(x, na, 0).size() * half(y, 1, 0).size() +
                                   half(x, na, 1).size() * half(y, 1, 1).size();
        CHECK(ads_join(x, y).size() == expect);
    }
}

TEST_CASE("ads strict mode rejects unacceptable glue coordinates") {
    // {00,01} has an empty coordinate-1 half, so no coordinate-1 norm.
    const Code bad = Code::from_words({w("00"), w("01")});
    const Code good = Code::from_words({w("000"), w("111")});
    CHECK_THROWS_AS(ads(good, bad, Mode::symmetric), hypothesis_error);
    CHECK_NOTHROW(ads_join(good, bad));  // unchecked set construction
}

TEST_CASE("ads norm bound holds over random hypothesis-satisfying pairs") {
    for (Mode mode : {Mode::symmetric, Mode::asymmetric}) {
        SplitMix64 rng(mode == Mode::symmetric ? 33 : 34);
        for (int trial = 0; trial < 60; ++trial) {
            const unsigned na = 2 + static_cast<unsigned>(rng.below(3));
            const unsigned nb = 2 + static_cast<unsigned>(rng.below(3));
            const Code a = random_normal_with_glue(na, na, mode, rng);
            const Code b = random_normal_with_glue(nb, 1, mode, rng);
            const ExtendedNat norm_a = norm_at(a, na, mode);
            const ExtendedNat norm_b = norm_at(b, 1, mode);
            const Code result = ads(a, b, mode);
            CHECK(result.length() == na + nb - 1);
            CHECK(norm_at(result, na, mode) <=
                  ExtendedNat(norm_a.finite() + norm_b.finite() - 1));
        }
    }
}

TEST_CASE("ads density never beats the direct sum on balanced normal operands") {
    SplitMix64 rng(35);
    int seen = 0;
    for (int trial = 0; trial < 200 && seen < 30; ++trial) {
        const unsigned na = 2 + static_cast<unsigned>(rng.below(3));
        const unsigned nb = 2 + static_cast<unsigned>(rng.below(3));
        const Code a = random_normal_with_glue(na, na, Mode::symmetric, rng);
        const Code b = random_normal_with_glue(nb, 1, Mode::symmetric, rng);
        if (!is_balanced(a, na) || !is_balanced(b, 1)) continue;
        ++seen;
        const std::uint64_t ra = covering_radius(a).finite();
        const std::uint64_t rb = covering_radius(b).finite();
        const std::uint64_t r = ra + rb;
        const unsigned n = na + nb;
        if (r > n - 1) continue;
        // Density of the direct sum at (n, R) vs the ADS at (n-1, R).
        const long double dense_sum =
            static_cast<long double>(a.size() * b.size()) / sphere_bound(n, r).value();
        const long double dense_ads =
            static_cast<long double>(a.size() * b.size() / 2) / sphere_bound(n - 1, r).value();
        CHECK(dense_ads <= dense_sum + 1e-12L);
    }
    CHECK(seen >= 20);
}

TEST_CASE("asds collapses to its surviving branch") {
    // T empty: pure (S ads K1).
    PatchedCode p;
    p.s = Code::full_cube(3);
    p.t = Code(3);
    p.coordinate = 3;
    p.target_norm = 1;
    p.mode = Mode::symmetric;
    const Code k1 = Code::from_words({w("000"), w("111")});
    const Code k2 = Code::full_cube(3);  // norm 1 at coordinate 1, within N+N'-1
    const Code result = asds(p, k1, k2);
    CHECK(result == ads_join(Code::full_cube(3), k1));
    CHECK(norm_at(result, 3) <= ExtendedNat(3));

    // S empty: pure (T ads K2).
    PatchedCode q;
    q.s = Code(3);
    q.t = Code::full_cube(3);
    q.coordinate = 3;
    q.target_norm = 2;
    q.mode = Mode::symmetric;
    const Code result2 = asds(q, k1, k2);
    CHECK(result2 == ads_join(Code::full_cube(3), k2));
}

TEST_CASE("asds rejects a broken patch or an oversized K2 norm") {
    PatchedCode p;
    p.s = Code::from_words({w("000"), w("111")});
    p.t = Code(3);
    p.coordinate = 3;
    p.target_norm = 1;  // rep3 misses plenty at norm 1 and T is empty
    p.mode = Mode::symmetric;
    const Code k1 = Code::from_words({w("000"), w("111")});
    CHECK_THROWS_AS(asds(p, k1, k1), hypothesis_error);

    PatchedCode ok;
    ok.s = Code::full_cube(3);
    ok.t = Code(3);
    ok.coordinate = 3;
    ok.target_norm = 1;
    ok.mode = Mode::symmetric;
    // K2 must have norm at most N + N' - 1 = 3 at coordinate 1; a code
    // with an empty half has infinite norm there.
    const Code bad_k2 = Code::from_words({w("000"), w("001")});
    CHECK_THROWS_AS(asds(ok, k1, bad_k2), hypothesis_error);
}

TEST_CASE("asds norm bound over sampler-made patched codes") {
    for (Mode mode : {Mode::symmetric, Mode::asymmetric}) {
        SplitMix64 rng(mode == Mode::symmetric ? 36 : 37);
        for (int trial = 0; trial < 40; ++trial) {
            const unsigned n = 4 + static_cast<unsigned>(rng.below(3));    // 4..6
            const unsigned nk = 2 + static_cast<unsigned>(rng.below(3));   // 2..4
            if (n + nk - 1 > 11) continue;
            PatchedCode p;
            p.s = random_nonempty(n, 12, rng);
            p.coordinate = n;
            p.target_norm = 2 + rng.below(n - 1);
            p.mode = mode;
            const Code missed = missed_vectors(p.s, n, p.target_norm, mode);
            std::set<std::uint64_t> t(missed.masks().begin(), missed.masks().end());
            for (std::uint64_t m : missed.masks()) t.insert(m ^ 1u);
            p.t = Code(n, {t.begin(), t.end()});
            REQUIRE(check_norm_patched(p).valid);

            const Code k1 = random_normal_with_glue(nk, 1, mode, rng);
            const ExtendedNat nprime = norm_at(k1, 1, mode);
            const std::uint64_t bound = p.target_norm + nprime.finite() - 1;
            // K2 = the full cube always satisfies the norm hypothesis.
            const Code k2 = Code::full_cube(nk);
            const Code result = asds(p, k1, k2);
            CHECK(result.length() == n + nk - 1);
            CHECK(norm_at(result, n, mode) <= ExtendedNat(bound));
        }
    }
}
