#include "covercraft/hypercube.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <stdexcept>

namespace covercraft {

namespace {

void check_length(unsigned length) {
    if (length < 1 || length > kWordCapacity)
        throw std::invalid_argument("word length must be in [1, " +
                                    std::to_string(kWordCapacity) + "], got " +
                                    std::to_string(length));
}

void check_same_length(const Word& x, const Word& y) {
    if (x.length() != y.length())
        throw std::invalid_argument("length mismatch: " + std::to_string(x.length()) +
                                    " vs " + std::to_string(y.length()));
}

std::uint64_t length_mask(unsigned length) {
    return length == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << length) - 1);
}

void check_coordinate(unsigned i, unsigned length) {
    if (i < 1 || i > length)
        throw std::invalid_argument("coordinate " + std::to_string(i) +
                                    " out of range [1, " + std::to_string(length) + "]");
}

}  // namespace

const char* to_string(Mode mode) {
    return mode == Mode::symmetric ? "symmetric" : "asymmetric";
}

void require_exhaustive(unsigned n, unsigned limit) {
    if (n > limit) throw limit_error(n, limit);
}

Word::Word(unsigned length, std::uint64_t bits) : length_(length), bits_(bits) {
    check_length(length);
    if ((bits & ~length_mask(length)) != 0)
        throw std::invalid_argument("word bits exceed length " + std::to_string(length));
}

Word Word::ones(unsigned length) {
    check_length(length);
    return Word(length, length_mask(length));
}

Word Word::from_string(std::string_view text) {
    if (text.empty()) throw std::invalid_argument("empty word string");
    if (text.size() > kWordCapacity)
        throw std::invalid_argument("word longer than capacity " +
                                    std::to_string(kWordCapacity));
    std::uint64_t bits = 0;
    for (char ch : text) {
        if (ch != '0' && ch != '1')
            throw std::invalid_argument(std::string("invalid character '") + ch +
                                        "' in word (expected '0' or '1')");
        bits = (bits << 1) | static_cast<std::uint64_t>(ch == '1');
    }
    return Word(static_cast<unsigned>(text.size()), bits);
}

bool Word::bit(unsigned i) const {
    check_coordinate(i, length_);
    return (bits_ >> (length_ - i)) & 1u;
}

Word Word::flipped(unsigned i) const {
    check_coordinate(i, length_);
    return Word(length_, bits_ ^ (std::uint64_t{1} << (length_ - i)));
}

unsigned Word::weight() const { return static_cast<unsigned>(std::popcount(bits_)); }

std::string Word::str() const {
    std::string out(length_, '0');
    for (unsigned i = 0; i < length_; ++i)
        if ((bits_ >> (length_ - 1 - i)) & 1u) out[i] = '1';
    return out;
}

Code::Code(unsigned length) : length_(length) { check_length(length); }

Code::Code(unsigned length, std::vector<std::uint64_t> masks)
    : length_(length), masks_(std::move(masks)) {
    check_length(length);
    const std::uint64_t allowed = length_mask(length);
    for (std::uint64_t m : masks_)
        if ((m & ~allowed) != 0)
            throw std::invalid_argument("code word exceeds length " + std::to_string(length));
    std::sort(masks_.begin(), masks_.end());
    if (std::adjacent_find(masks_.begin(), masks_.end()) != masks_.end())
        throw std::invalid_argument("duplicate word in code");
}

Code Code::full_cube(unsigned length) {
    check_length(length);
    if (length > 30) throw std::invalid_argument("full cube too large to materialize");
    std::vector<std::uint64_t> masks(std::size_t{1} << length);
    for (std::size_t i = 0; i < masks.size(); ++i) masks[i] = i;
    return Code(length, std::move(masks));
}

Code Code::from_words(const std::vector<Word>& words) {
    if (words.empty()) throw std::invalid_argument("cannot infer length of an empty code");
    std::vector<std::uint64_t> masks;
    masks.reserve(words.size());
    for (const Word& w : words) {
        if (w.length() != words.front().length())
            throw std::invalid_argument("code words must share one length");
        masks.push_back(w.bits());
    }
    return Code(words.front().length(), std::move(masks));
}

bool Code::contains(std::uint64_t mask) const {
    return std::binary_search(masks_.begin(), masks_.end(), mask);
}

bool Code::contains(const Word& w) const {
    return w.length() == length_ && contains(w.bits());
}

std::vector<Word> Code::words() const {
    std::vector<Word> out;
    out.reserve(masks_.size());
    for (std::uint64_t m : masks_) out.emplace_back(length_, m);
    return out;
}

unsigned weight(const Word& x) { return x.weight(); }

unsigned hamming_distance(const Word& x, const Word& y) {
    check_same_length(x, y);
    return static_cast<unsigned>(std::popcount(x.bits() ^ y.bits()));
}

bool precedes(const Word& x, const Word& y) {
    check_same_length(x, y);
    return (x.bits() & ~y.bits()) == 0;
}

ExtendedNat distance_to_set(const Word& x, const Code& y) {
    if (y.empty()) return ExtendedNat::infinity();
    if (x.length() != y.length())
        throw std::invalid_argument("length mismatch between word and code");
    unsigned best = x.length() + 1;
    for (std::uint64_t m : y.masks())
        best = std::min(best, static_cast<unsigned>(std::popcount(x.bits() ^ m)));
    return ExtendedNat(best);
}

ExtendedNat asym_distance_to_set(const Word& x, const Code& y) {
    if (y.empty()) return ExtendedNat::infinity();
    if (x.length() != y.length())
        throw std::invalid_argument("length mismatch between word and code");
    ExtendedNat best = ExtendedNat::infinity();
    for (std::uint64_t m : y.masks()) {
        if ((x.bits() & ~m) != 0) continue;  // m does not dominate x
        ExtendedNat d{static_cast<std::uint64_t>(std::popcount(x.bits() ^ m))};
        best = std::min(best, d);
    }
    return best;
}

std::uint64_t binom(unsigned n, unsigned k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    unsigned __int128 acc = 1;
    for (unsigned i = 1; i <= k; ++i) {
        acc = acc * (n - k + i) / i;
        if (acc > std::numeric_limits<std::uint64_t>::max())
            throw std::overflow_error("binomial coefficient exceeds 64-bit capacity");
    }
    return static_cast<std::uint64_t>(acc);
}

std::uint64_t binom_sum(unsigned n, int r) {
    if (r < 0) return 0;
    if (static_cast<unsigned>(r) >= n) {
        if (n >= 64) throw std::overflow_error("2^n exceeds 64-bit capacity");
        return std::uint64_t{1} << n;
    }
    unsigned __int128 acc = 0;
    unsigned __int128 term = 1;
    for (unsigned i = 0; i <= static_cast<unsigned>(r); ++i) {
        if (i > 0) term = term * (n - i + 1) / i;
        acc += term;
        if (acc > std::numeric_limits<std::uint64_t>::max())
            throw std::overflow_error("binomial sum exceeds 64-bit capacity");
    }
    return static_cast<std::uint64_t>(acc);
}

std::uint64_t ball_size(unsigned n, int r) {
    check_length(n);
    return binom_sum(n, r);
}

std::uint64_t directed_ball_size(unsigned n, unsigned l, int r) {
    check_length(n);
    if (l > n)
        throw std::invalid_argument("center weight " + std::to_string(l) +
                                    " out of range [0, " + std::to_string(n) + "]");
    return binom_sum(n - l, r);
}

namespace {

// Appends all submasks of `space` with popcount <= radius, XORed onto base.
void collect_flips(std::uint64_t base, std::uint64_t space, int radius,
                   std::vector<std::uint64_t>& out) {
    if (radius < 0) return;
    std::vector<unsigned> positions;
    for (unsigned b = 0; b < 64; ++b)
        if ((space >> b) & 1u) positions.push_back(b);
    // Depth-first choice of up to `radius` flip positions, in increasing
    // position order so every subset is produced exactly once.
    struct Frame {
        std::uint64_t mask;
        unsigned next;
        int left;
    };
    std::vector<Frame> stack{{0, 0, radius}};
    while (!stack.empty()) {
        Frame f = stack.back();
        stack.pop_back();
        out.push_back(base ^ f.mask);
        if (f.left == 0) continue;
        for (unsigned idx = f.next; idx < positions.size(); ++idx)
            stack.push_back({f.mask | (std::uint64_t{1} << positions[idx]), idx + 1, f.left - 1});
    }
}

}  // namespace

Code enumerate_ball(const Word& center, int radius, BallKind kind) {
    if (radius < 0) throw std::invalid_argument("ball radius must be nonnegative");
    const unsigned n = center.length();
    require_exhaustive(n, kDefaultExhaustiveLimit);
    const std::uint64_t full = n == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
    std::uint64_t space = 0;
    switch (kind) {
        case BallKind::undirected: space = full; break;
        case BallKind::upward: space = full & ~center.bits(); break;
        case BallKind::downward: space = center.bits(); break;
    }
    std::vector<std::uint64_t> masks;
    collect_flips(center.bits(), space, radius, masks);
    return Code(n, std::move(masks));
}

Code half(const Code& c, unsigned i, bool b) {
    check_coordinate(i, c.length());
    const unsigned shift = c.length() - i;
    std::vector<std::uint64_t> masks;
    for (std::uint64_t m : c.masks())
        if (((m >> shift) & 1u) == static_cast<std::uint64_t>(b)) masks.push_back(m);
    return Code(c.length(), std::move(masks));
}

Word flip(const Word& x, unsigned i) { return x.flipped(i); }

Word concat(const Word& x, const Word& y) {
    if (x.length() + y.length() > kWordCapacity)
        throw std::invalid_argument("concatenation exceeds word capacity");
    return Word(x.length() + y.length(), (x.bits() << y.length()) | y.bits());
}

Code permute_coordinates(const Code& c, const std::vector<unsigned>& perm) {
    const unsigned n = c.length();
    if (perm.size() != n) throw std::invalid_argument("permutation size must equal code length");
    std::vector<bool> seen(n + 1, false);
    for (unsigned p : perm) {
        if (p < 1 || p > n || seen[p])
            throw std::invalid_argument("invalid coordinate permutation");
        seen[p] = true;
    }
    std::vector<std::uint64_t> masks;
    masks.reserve(c.size());
    for (std::uint64_t m : c.masks()) {
        std::uint64_t out = 0;
        for (unsigned i = 1; i <= n; ++i) {
            const unsigned src = perm[i - 1];
            const std::uint64_t bit = (m >> (n - src)) & 1u;
            out |= bit << (n - i);
        }
        masks.push_back(out);
    }
    return Code(n, std::move(masks));
}

Code swap_coordinates(const Code& c, unsigned i, unsigned j) {
    check_coordinate(i, c.length());
    check_coordinate(j, c.length());
    std::vector<unsigned> perm(c.length());
    for (unsigned k = 1; k <= c.length(); ++k) perm[k - 1] = k;
    std::swap(perm[i - 1], perm[j - 1]);
    return permute_coordinates(c, perm);
}

}  // namespace covercraft
