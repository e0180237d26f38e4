#pragma once

// Concatenation constructions: direct sum, amalgamated direct sum (ADS)
// over one shared coordinate, and the amalgamated semi-direct sum (ASDS)
// of a norm-patched code with a pair of companion codes.
//
// Glue coordinates are fixed by convention: the last coordinate of the
// left operand overlaps the first coordinate of the right operand.
// Use swap_coordinates / permute_coordinates beforehand if an operand's
// acceptable coordinate sits elsewhere.

#include "covercraft/hypercube.hpp"
#include "covercraft/radius_norm.hpp"

namespace covercraft {

// Cartesian concatenation {(a, b)}; length n_A + n_B, size |A| * |B|.
Code direct_sum(const Code& a, const Code& b);

// Raw ADS set construction
//   {(a,0,b) : (a,0) in A, (0,b) in B} union {(a,1,b) : (a,1) in A, (1,b) in B}
// with no hypothesis checking; empty operands yield empty branches.
Code ads_join(const Code& a, const Code& b);

// ADS with theorem hypotheses: in strict mode both operands must be
// normal in `mode` with the glue coordinate acceptable, and the glue
// norm of the result is re-verified when the result is small enough.
// Throws hypothesis_error naming the failed hypothesis and the
// offending norm values.
Code ads(const Code& a, const Code& b, Mode mode, bool strict = true,
         unsigned limit = kDefaultExhaustiveLimit);

// ASDS (S,T) with (K1,K2): (S ads_join K1) union (T ads_join K2),
// deduplicated.  Strict mode verifies: P is a valid norm-patched code
// with its last coordinate designated, K1 has a finite glue norm N',
// and K2's glue norm is at most N + N' - 1; the result's glue norm is
// re-verified when small enough.
Code asds(const PatchedCode& p, const Code& k1, const Code& k2, bool strict = true,
          unsigned limit = kDefaultExhaustiveLimit);

}  // namespace covercraft
