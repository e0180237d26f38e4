#pragma once

// Independent oracles, written before and kept apart from the library
// implementations they check: plain double-loop radius and norm
// evaluators, a subset-enumeration optimal-cover search for n <= 5, and
// quad-precision evaluations of the patch expectation bounds.

#include <cstdint>

#include "covercraft/hypercube.hpp"

namespace naive {

covercraft::ExtendedNat covering_radius(const covercraft::Code& c);
covercraft::ExtendedNat asym_covering_radius(const covercraft::Code& c);
covercraft::ExtendedNat norm_at(const covercraft::Code& c, unsigned coordinate);
covercraft::ExtendedNat asym_norm_at(const covercraft::Code& c, unsigned coordinate);

// Exact minimum cover size by enumerating every size-s subset of Q_n in
// increasing s; n <= 5 only.
std::uint64_t optimal_cover_size(unsigned n, unsigned radius, covercraft::Mode mode);

// Quad-precision evaluations of the closed-form patch bounds.
long double tau_hiprec(unsigned n, unsigned target_norm, long double x);
long double tau_asym_hiprec(unsigned n, unsigned target_norm, unsigned rare_radius,
                            long double x);

}  // namespace naive
