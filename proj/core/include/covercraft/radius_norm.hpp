#pragma once

// Exact covering radii, coordinate norms, normality and norm-patched
// validation.  Everything here scans all of Q_n (via the distance
// tables), so every entry point takes an exhaustive length cap.

#include <cstdint>
#include <vector>

#include "covercraft/hypercube.hpp"

namespace covercraft {

// max over x in Q_n of d(x, C); infinity iff C is empty.
ExtendedNat covering_radius(const Code& c, unsigned limit = kDefaultExhaustiveLimit);

// max over x of the distance to the nearest dominating codeword;
// infinity iff some word (the all-ones word, in particular, unless it
// is a codeword) is dominated by no codeword.
ExtendedNat asym_covering_radius(const Code& c, unsigned limit = kDefaultExhaustiveLimit);

// Symmetric norm with respect to coordinate i:
//   N^(i) = max_x { d(x, C_0^(i)) + d(x, C_1^(i)) },
// infinity iff either half is empty.
ExtendedNat norm_at(const Code& c, unsigned i, unsigned limit = kDefaultExhaustiveLimit);

// Asymmetric norm with respect to coordinate i: the larger of
//   max over x with x_i = 0 of d+(x, C_0^(i)) + d+(x, C_1^(i))  and
//   max over x with x_i = 1 of 2 d+(x, C_1^(i)) + 1,
// with infinity whenever a required d+ is infinite.
ExtendedNat asym_norm_at(const Code& c, unsigned i, unsigned limit = kDefaultExhaustiveLimit);

ExtendedNat norm_at(const Code& c, unsigned i, Mode mode, unsigned limit = kDefaultExhaustiveLimit);

struct NormReport {
    Mode mode = Mode::symmetric;
    std::uint64_t threshold = 0;
    std::vector<ExtendedNat> per_coordinate;  // index 0 holds coordinate 1
    ExtendedNat min_norm;
    std::vector<unsigned> acceptable;  // coordinates i with N^(i) <= threshold
};

NormReport norm_report(const Code& c, Mode mode, std::uint64_t threshold,
                       unsigned limit = kDefaultExhaustiveLimit);

struct NormalityCheck {
    bool normal = false;          // min norm in {2R, 2R+1} for the computed radius R
    bool radius_matches = false;  // supplied radius equals the computed one
    ExtendedNat supplied_radius;
    ExtendedNat computed_radius;
    ExtendedNat min_norm;
};

// Verifies the supplied radius instead of silently recomputing; a
// mismatch is reported through radius_matches while `normal` is always
// judged against the computed radius.
NormalityCheck is_normal(const Code& c, ExtendedNat radius, Mode mode,
                         unsigned limit = kDefaultExhaustiveLimit);

// |C_0^(i)| == |C_1^(i)|.
bool is_balanced(const Code& c, unsigned i);

// Words violating the norm condition for S at coordinate i, in
// lexicographic order.  Symmetric mode: d(x,S_0)+d(x,S_1) > N.
// Asymmetric mode: the branch condition for the respective half.
Code missed_vectors(const Code& s, unsigned i, std::uint64_t target_norm, Mode mode,
                    unsigned limit = kDefaultExhaustiveLimit);

// A candidate norm N-patched code (S, T) with its designated coordinate.
struct PatchedCode {
    Code s;
    Code t;
    unsigned coordinate = 0;
    std::uint64_t target_norm = 0;
    Mode mode = Mode::symmetric;
};

struct PatchCheck {
    bool valid = false;
    std::vector<Word> violations;  // lexicographic order
};

// Checks the defining disjunction of a norm-patched code at every word:
// symmetric      (I) norm condition under S, or (II) {x, x+e_i} in T;
// asymmetric     x_i=0 as above, x_i=1 with 2d+(x,S_1)+1 <= N or x in T.
PatchCheck check_norm_patched(const PatchedCode& p, unsigned limit = kDefaultExhaustiveLimit);

}  // namespace covercraft
