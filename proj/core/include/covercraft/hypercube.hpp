#pragma once

// Binary words, codes and ball combinatorics on the hypercube Q_n.
//
// A word of length n is stored as a 64-bit mask with coordinate i
// (1-based, as in the covering-code literature) at bit position n-i.
// Consequences used throughout the library:
//   * numeric mask order equals lexicographic order of the bit strings,
//   * coordinate n (the usual patch/glue coordinate) is bit 0, so the
//     two coordinate-n halves of Q_n are the even and the odd masks,
//   * concatenation is (left.bits() << right.length()) | right.bits().

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "covercraft/errors.hpp"

namespace covercraft {

// Fixed word capacity: one machine word of coordinates.
inline constexpr unsigned kWordCapacity = 64;

// Default cap for operations that scan all 2^n words.  Scans are linear
// in 2^n (times n for distance transforms); callers may raise the cap
// explicitly and the CLI honours COVERCRAFT_N_LIMIT.
inline constexpr unsigned kDefaultExhaustiveLimit = 24;

enum class Mode { symmetric, asymmetric };

const char* to_string(Mode mode);

// Throws limit_error when a 2^n scan over Q_n would exceed `limit`.
void require_exhaustive(unsigned n, unsigned limit);

// A nonnegative integer extended with infinity; houses d(x, empty) and
// the unreachable cases of the asymmetric distance.  Infinity compares
// greater than every finite value and absorbs addition.
class ExtendedNat {
public:
    constexpr ExtendedNat() : value_(0) {}
    constexpr ExtendedNat(std::uint64_t value) : value_(value) {}

    static constexpr ExtendedNat infinity() { return ExtendedNat(kInf); }

    constexpr bool is_infinite() const { return value_ == kInf; }

    // Finite value; must not be called on infinity.
    constexpr std::uint64_t finite() const { return value_; }

    friend constexpr ExtendedNat operator+(ExtendedNat a, ExtendedNat b) {
        if (a.is_infinite() || b.is_infinite()) return infinity();
        return ExtendedNat(a.value_ + b.value_);
    }

    friend constexpr auto operator<=>(ExtendedNat a, ExtendedNat b) = default;

    std::string str() const { return is_infinite() ? "inf" : std::to_string(value_); }

private:
    static constexpr std::uint64_t kInf = ~std::uint64_t{0};
    std::uint64_t value_;
};

class Word {
public:
    // Validates 1 <= length <= kWordCapacity and that no bit beyond the
    // length is set.
    Word(unsigned length, std::uint64_t bits);

    static Word zero(unsigned length) { return Word(length, 0); }
    static Word ones(unsigned length);

    // Parses a string of '0'/'1' characters; the first character is
    // coordinate 1.
    static Word from_string(std::string_view text);

    unsigned length() const { return length_; }
    std::uint64_t bits() const { return bits_; }

    // Coordinate access, 1-based.
    bool bit(unsigned i) const;
    Word flipped(unsigned i) const;

    unsigned weight() const;

    std::string str() const;

    friend auto operator<=>(const Word&, const Word&) = default;

private:
    unsigned length_;
    std::uint64_t bits_;
};

// A set of distinct words of common length.  May be empty; the length
// is carried even then so that d(x, empty) = infinity stays typed.
// Masks are kept sorted, which is lexicographic word order.
class Code {
public:
    Code() : length_(1) {}  // empty code over Q_1
    explicit Code(unsigned length);
    Code(unsigned length, std::vector<std::uint64_t> masks);  // rejects duplicates

    static Code full_cube(unsigned length);
    static Code from_words(const std::vector<Word>& words);

    unsigned length() const { return length_; }
    std::size_t size() const { return masks_.size(); }
    bool empty() const { return masks_.empty(); }
    bool contains(std::uint64_t mask) const;
    bool contains(const Word& w) const;

    const std::vector<std::uint64_t>& masks() const { return masks_; }
    Word word(std::size_t index) const { return Word(length_, masks_[index]); }
    std::vector<Word> words() const;

    friend bool operator==(const Code&, const Code&) = default;

private:
    unsigned length_;
    std::vector<std::uint64_t> masks_;
};

unsigned weight(const Word& x);

// Number of differing coordinates; throws on length mismatch.
unsigned hamming_distance(const Word& x, const Word& y);

// x precedes y in the boolean lattice: x_i <= y_i for all i.
bool precedes(const Word& x, const Word& y);

// min over y in Y of d(x, y); infinity when Y is empty.
ExtendedNat distance_to_set(const Word& x, const Code& y);

// min over y in Y with x preceding y; infinity when no member dominates x.
ExtendedNat asym_distance_to_set(const Word& x, const Code& y);

// Exact binomial coefficient; throws std::overflow_error beyond uint64.
std::uint64_t binom(unsigned n, unsigned k);

// binom(n, <= r) = sum_{i=0}^{r} binom(n, i); 0 for r < 0 (the empty-ball
// convention required by the i = 0 terms of the patch expectation sums)
// and 2^n for r >= n.  Throws std::overflow_error beyond uint64.
std::uint64_t binom_sum(unsigned n, int r);

// |B_n(x, r)| = binom(n, <= r); independent of the center.
std::uint64_t ball_size(unsigned n, int r);

// |B_n^+(x, r)| for a center of weight l: binom(n - l, <= r).
// The downward ball of a weight-l center has size directed_ball_size(n, n-l, r).
std::uint64_t directed_ball_size(unsigned n, unsigned l, int r);

enum class BallKind { undirected, upward, downward };

Code enumerate_ball(const Word& center, int radius, BallKind kind);

// {c in C : c_i = b}; the two halves partition C.
Code half(const Code& c, unsigned i, bool b);

Word flip(const Word& x, unsigned i);

// (x, y): coordinates of x followed by coordinates of y.
Word concat(const Word& x, const Word& y);

// Applies a coordinate permutation: coordinate i of the result is
// coordinate perm[i-1] of the input (perm is a permutation of 1..n).
Code permute_coordinates(const Code& c, const std::vector<unsigned>& perm);

// Swaps coordinates i and j (plumbing for moving an acceptable
// coordinate into glue position).
Code swap_coordinates(const Code& c, unsigned i, unsigned j);

}  // namespace covercraft
