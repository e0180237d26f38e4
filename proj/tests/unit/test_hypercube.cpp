#include "doctest.h"

#include <set>

#include "covercraft/hypercube.hpp"
#include "covercraft/rng.hpp"

using namespace covercraft;

namespace {

Word w(const char* s) { return Word::from_string(s); }

Code random_code(unsigned n, std::size_t max_size, SplitMix64& rng) {
    std::set<std::uint64_t> picked;
    const std::uint64_t space = std::uint64_t{1} << n;
    const std::size_t want = std::min<std::size_t>(rng.below(max_size + 1), space);
    while (picked.size() < want) picked.insert(rng.below(space));
    return Code(n, {picked.begin(), picked.end()});
}

}  // namespace

TEST_CASE("weight counts set coordinates") {
    CHECK(weight(w("000")) == 0);
    CHECK(weight(w("10110")) == 3);
    CHECK(weight(w("1111")) == 4);
}

TEST_CASE("hamming distance") {
    CHECK(hamming_distance(w("101"), w("001")) == 1);
    CHECK(hamming_distance(w("1010"), w("1010")) == 0);
    CHECK(hamming_distance(w("0000"), w("1111")) == 4);
    CHECK_THROWS_AS(hamming_distance(w("00"), w("000")), std::invalid_argument);
}

TEST_CASE("hamming distance equals xor weight and satisfies metric axioms") {
    SplitMix64 rng(11);
    for (int trial = 0; trial < 500; ++trial) {
        const unsigned n = 1 + static_cast<unsigned>(rng.below(12));
        const std::uint64_t space = std::uint64_t{1} << n;
        const Word a(n, rng.below(space)), b(n, rng.below(space)), c(n, rng.below(space));
        CHECK(hamming_distance(a, b) ==
              Word(n, a.bits() ^ b.bits()).weight());
        CHECK(hamming_distance(a, b) == hamming_distance(b, a));
        CHECK(hamming_distance(a, c) <= hamming_distance(a, b) + hamming_distance(b, c));
        CHECK((hamming_distance(a, b) == 0) == (a == b));
    }
}

TEST_CASE("precedes is the coordinatewise partial order") {
    CHECK(precedes(w("010"), w("011")));
    CHECK_FALSE(precedes(w("010"), w("001")));
    CHECK(precedes(w("0110"), w("0110")));
}

TEST_CASE("distance to a set and the empty-set convention") {
    CHECK(distance_to_set(w("000"), Code::from_words({w("111")})) == ExtendedNat(3));
    CHECK(distance_to_set(w("000"), Code(3)) == ExtendedNat::infinity());
    CHECK(distance_to_set(w("101"), Code::from_words({w("000"), w("111")})) == ExtendedNat(1));
}

TEST_CASE("asymmetric distance minimizes over dominating members only") {
    CHECK(asym_distance_to_set(w("010"), Code::from_words({w("110")})) == ExtendedNat(1));
    CHECK(asym_distance_to_set(w("10"), Code::from_words({w("00"), w("01")})) ==
          ExtendedNat::infinity());
    CHECK(asym_distance_to_set(w("000"), Code::from_words({w("110"), w("001")})) ==
          ExtendedNat(1));
    CHECK(asym_distance_to_set(w("01"), Code(2)) == ExtendedNat::infinity());
}

TEST_CASE("asymmetric distance dominates the symmetric one") {
    SplitMix64 rng(12);
    for (int trial = 0; trial < 300; ++trial) {
        const unsigned n = 2 + static_cast<unsigned>(rng.below(6));
        const Code y = random_code(n, 6, rng);
        const Word x(n, rng.below(std::uint64_t{1} << n));
        CHECK(asym_distance_to_set(x, y) >= distance_to_set(x, y));
    }
}

TEST_CASE("ball sizes") {
    CHECK(ball_size(5, 1) == 6);
    CHECK(ball_size(4, 2) == 11);
    CHECK(ball_size(7, -1) == 0);
    CHECK(ball_size(6, 6) == 64);
    CHECK(ball_size(6, 9) == 64);
    CHECK(directed_ball_size(5, 2, 1) == 4);
    CHECK(directed_ball_size(8, 8, 0) == 1);
    CHECK(directed_ball_size(6, 1, 2) == 16);
    CHECK(directed_ball_size(6, 1, -1) == 0);
    CHECK_THROWS_AS(directed_ball_size(5, 6, 1), std::invalid_argument);
}

TEST_CASE("ball enumeration matches the closed-form sizes") {
    CHECK(enumerate_ball(w("00"), 1, BallKind::undirected) ==
          Code::from_words({w("00"), w("01"), w("10")}));
    CHECK(enumerate_ball(w("01"), 1, BallKind::upward) == Code::from_words({w("01"), w("11")}));
    CHECK(enumerate_ball(w("110"), 1, BallKind::downward) ==
          Code::from_words({w("110"), w("100"), w("010")}));

    SplitMix64 rng(13);
    for (int trial = 0; trial < 400; ++trial) {
        const unsigned n = 1 + static_cast<unsigned>(rng.below(16));
        const int r = static_cast<int>(rng.below(n + 1));
        const Word x(n, rng.below(std::uint64_t{1} << n));
        const unsigned l = x.weight();
        CHECK(enumerate_ball(x, r, BallKind::undirected).size() == ball_size(n, r));
        CHECK(enumerate_ball(x, r, BallKind::upward).size() == directed_ball_size(n, l, r));
        CHECK(enumerate_ball(x, r, BallKind::downward).size() ==
              directed_ball_size(n, n - l, r));
    }
}

TEST_CASE("halves partition a code") {
    const Code c = Code::from_words({w("000"), w("111")});
    CHECK(half(c, 1, 0) == Code::from_words({w("000")}));
    CHECK(half(c, 1, 1) == Code::from_words({w("111")}));
    CHECK(half(Code(4), 2, 0).empty());

    SplitMix64 rng(14);
    for (int trial = 0; trial < 200; ++trial) {
        const unsigned n = 1 + static_cast<unsigned>(rng.below(8));
        const Code code = random_code(n, 10, rng);
        const unsigned i = 1 + static_cast<unsigned>(rng.below(n));
        const Code h0 = half(code, i, 0), h1 = half(code, i, 1);
        CHECK(h0.size() + h1.size() == code.size());
        for (std::uint64_t m : h0.masks()) CHECK_FALSE(h1.contains(m));
    }
}

TEST_CASE("flip is an involution on the named coordinate") {
    CHECK(flip(w("000"), 2) == w("010"));
    CHECK(flip(w("111"), 3) == w("110"));
    CHECK(flip(flip(w("10110"), 4), 4) == w("10110"));
    CHECK_THROWS_AS(flip(w("101"), 4), std::invalid_argument);
}

TEST_CASE("word string round trip and lexicographic order") {
    CHECK(w("10110").str() == "10110");
    CHECK(w("100") > w("010"));  // string order, coordinate 1 first
    CHECK(Word::zero(4).str() == "0000");
    CHECK(Word::ones(4).str() == "1111");
    CHECK_THROWS_AS(Word::from_string("10a"), std::invalid_argument);
}

TEST_CASE("concat keeps coordinate order") {
    CHECK(concat(w("10"), w("011")) == w("10011"));
    CHECK(concat(w("1"), w("0")) == w("10"));
}

TEST_CASE("codes reject duplicates and mixed lengths") {
    CHECK_THROWS_AS(Code(3, {1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(Code::from_words({w("01"), w("011")}), std::invalid_argument);
    CHECK_THROWS_AS(Code(2, {7}), std::invalid_argument);  // bits beyond length
}

TEST_CASE("coordinate permutation plumbing") {
    const Code c = Code::from_words({w("100"), w("011")});
    CHECK(swap_coordinates(c, 1, 3) == Code::from_words({w("001"), w("110")}));
    CHECK(permute_coordinates(c, {1, 2, 3}) == c);
    CHECK_THROWS_AS(permute_coordinates(c, {1, 1, 2}), std::invalid_argument);
}

TEST_CASE("exhaustive limit is enforced") {
    CHECK_THROWS_AS(require_exhaustive(25, 24), limit_error);
    CHECK_NOTHROW(require_exhaustive(24, 24));
    try {
        require_exhaustive(30, 24);
    } catch (const limit_error& e) {
        CHECK(e.n() == 30);
        CHECK(e.limit() == 24);
    }
}

TEST_CASE("extended naturals: infinity absorbs and dominates") {
    const ExtendedNat inf = ExtendedNat::infinity();
    CHECK(inf > ExtendedNat(1'000'000));
    CHECK((ExtendedNat(3) + inf).is_infinite());
    CHECK((inf + inf).is_infinite());
    CHECK(ExtendedNat(3) + ExtendedNat(4) == ExtendedNat(7));
    CHECK(inf.str() == "inf");
    CHECK(ExtendedNat(12).str() == "12");
}
