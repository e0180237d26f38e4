#pragma once

// Density and bound calculus: the sphere bound, code densities, the
// recursion objective f(x) = ex / (1 - c e^{-x} R^R), its optimal root
// x0, the closed-form bound e(R ln R + ln R + ln ln R + 4), and the
// end-to-end recursive ASDS construction.  All logarithms are natural.

#include <cstdint>

#include "covercraft/hypercube.hpp"
#include "covercraft/patching.hpp"
#include "covercraft/radius_norm.hpp"

namespace covercraft {

// Exact nonnegative rational, reduced.
struct Rational {
    std::uint64_t num = 0;
    std::uint64_t den = 1;

    long double value() const {
        return static_cast<long double>(num) / static_cast<long double>(den);
    }
};

// 2^n / binom(n, <= R) as an exact rational (n <= 63).
Rational sphere_bound(unsigned n, unsigned radius);

struct DensityReport {
    unsigned n = 0;
    std::uint64_t radius = 0;
    Mode mode = Mode::symmetric;
    std::uint64_t code_size = 0;
    long double denominator = 0;  // 2^n/binom(n,<=R), or 2^n/binom(floor(n/2),<=R)
    long double density = 0;      // code_size / denominator
    bool radius_matches = false;  // supplied radius equals the computed one
    ExtendedNat computed_radius;
};

// Density of C as an (n,R)-code (symmetric) or (n,R)+-code (asymmetric).
// The supplied radius is verified against the computed covering radius
// and a mismatch is reported, not silently fixed.
DensityReport density(const Code& c, std::uint64_t radius, Mode mode,
                      unsigned limit = kDefaultExhaustiveLimit);

// f(x) = e x / (1 - c e^{-x} R^R), c = 4 symmetric / 3 asymmetric.
// Throws std::invalid_argument when c e^{-x} R^R >= 1.
long double f_objective(long double x, unsigned radius, Mode mode);

// Positive root of 1 - c (1+x) e^{-x} R^R for R >= 2, solved by
// bisection on the increasing branch and polished by Newton steps;
// satisfies the equivalent identity c e^{-x0} R^R = 1/(1+x0).
long double x0_root(unsigned radius, Mode mode);

struct BoundReport {
    unsigned radius = 0;
    Mode mode = Mode::symmetric;
    long double x0 = 0;
    long double f_at_x0 = 0;      // e (x0 + 1)
    long double closed_form = 0;  // e (R ln R + ln R + ln ln R + 4)
};

BoundReport closed_form_bound(unsigned radius, Mode mode);

// Checks that the guess x = R ln R + ln R + ln ln R + 3 lands past the
// root: e^x > 4 (1+x) R^R.
bool bound_guess_clears_root(unsigned radius);

// limsup targets of the recursion coefficients at a given x; diagnostic
// reference values only.
struct RecursionLimits {
    long double a_limsup = 0;  // x (R/(R-1))^(R-1)
    long double a_cap = 0;     // e x
    long double b_limsup = 0;  // c R^R e^{-x}
};

RecursionLimits ads_recursion_limits(unsigned radius, long double x, Mode mode);

struct RecursiveBuild {
    Code code;
    PatchedCode patched;
    std::uint64_t k = 0;
    unsigned n1 = 0;       // floor(n/R), the companion length
    unsigned n1prime = 0;  // n - n1 + 1, the sampled length
    ExtendedNat radius;    // computed covering radius of the result
    NormalityCheck normality;
    DensityReport density;
};

// Samples a balanced norm (2R-1)-patched code of length
// n1' = n - floor(n/R) + 1 and glues it, by ASDS, onto a normal (n1,1)
// code K1 and a normal (n1,R) code K2 (both with their first coordinate
// acceptable).  The result has length n, norm at most 2R+1 at the glue
// coordinate and hence covering radius at most R.
RecursiveBuild recursive_construct(unsigned n, unsigned radius, long double x, Mode mode,
                                   std::uint64_t seed, const Code& k1, const Code& k2,
                                   unsigned limit = kDefaultExhaustiveLimit);

}  // namespace covercraft
