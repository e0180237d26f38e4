#include "covercraft/constructions.hpp"

#include <algorithm>
#include <stdexcept>

namespace covercraft {

namespace {

std::string norm_str(ExtendedNat v) { return v.str(); }

// Normal in `mode` with coordinate `glue` acceptable w.r.t. 2R+1.
// Returns the exact glue-coordinate norm on success.
ExtendedNat require_normal_with_glue(const Code& c, unsigned glue, Mode mode, unsigned limit,
                                     const char* role) {
    const ExtendedNat radius =
        mode == Mode::symmetric ? covering_radius(c, limit) : asym_covering_radius(c, limit);
    if (radius.is_infinite())
        throw hypothesis_error(std::string(role) + " has infinite covering radius");
    const NormalityCheck check = is_normal(c, radius, mode, limit);
    if (!check.normal)
        throw hypothesis_error(std::string(role) + " is not normal: min norm " +
                               norm_str(check.min_norm) + " with covering radius " +
                               radius.str());
    const ExtendedNat glue_norm = norm_at(c, glue, mode, limit);
    const ExtendedNat threshold{2 * radius.finite() + 1};
    if (glue_norm > threshold)
        throw hypothesis_error(std::string(role) + " glue coordinate " + std::to_string(glue) +
                               " not acceptable: norm " + norm_str(glue_norm) + " exceeds " +
                               threshold.str());
    return glue_norm;
}

}  // namespace

Code direct_sum(const Code& a, const Code& b) {
    if (a.empty() || b.empty())
        throw std::invalid_argument("direct sum requires nonempty operands");
    if (a.length() + b.length() > kWordCapacity)
        throw std::invalid_argument("direct sum exceeds word capacity");
    std::vector<std::uint64_t> masks;
    masks.reserve(a.size() * b.size());
    for (std::uint64_t am : a.masks())
        for (std::uint64_t bm : b.masks()) masks.push_back((am << b.length()) | bm);
    return Code(a.length() + b.length(), std::move(masks));
}

Code ads_join(const Code& a, const Code& b) {
    const unsigned na = a.length();
    const unsigned nb = b.length();
    if (na + nb - 1 > kWordCapacity)
        throw std::invalid_argument("amalgamated sum exceeds word capacity");
    // Coordinate n_A of A is bit 0; coordinate 1 of B is bit n_B - 1.
    // Overlapping them gives (a_high << n_B) | b_mask.
    std::vector<std::uint64_t> masks;
    for (std::uint64_t am : a.masks()) {
        const std::uint64_t glue = am & 1u;
        const std::uint64_t high = (am >> 1) << nb;
        for (std::uint64_t bm : b.masks()) {
            if ((bm >> (nb - 1)) != glue) continue;
            masks.push_back(high | bm);
        }
    }
    std::sort(masks.begin(), masks.end());
    masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
    return Code(na + nb - 1, std::move(masks));
}

Code ads(const Code& a, const Code& b, Mode mode, bool strict, unsigned limit) {
    if (a.empty() || b.empty()) throw std::invalid_argument("ADS requires nonempty operands");
    ExtendedNat norm_a = ExtendedNat::infinity();
    ExtendedNat norm_b = ExtendedNat::infinity();
    if (strict) {
        norm_a = require_normal_with_glue(a, a.length(), mode, limit, "left operand");
        norm_b = require_normal_with_glue(b, 1, mode, limit, "right operand");
    }
    Code result = ads_join(a, b);
    if (strict && result.length() <= limit) {
        const ExtendedNat glue_norm = norm_at(result, a.length(), mode, limit);
        const ExtendedNat bound = norm_a + norm_b + ExtendedNat(0);
        // ADS guarantee: the glue norm is at most N_A + N_B - 1.
        if (!bound.is_infinite() && glue_norm > ExtendedNat(bound.finite() - 1))
            throw std::logic_error("ADS glue norm " + glue_norm.str() +
                                   " exceeds N_A + N_B - 1 = " +
                                   std::to_string(bound.finite() - 1));
    }
    return result;
}

Code asds(const PatchedCode& p, const Code& k1, const Code& k2, bool strict, unsigned limit) {
    const unsigned n = p.s.length();
    if (k1.length() != k2.length())
        throw std::invalid_argument("K1 and K2 must have equal lengths");
    ExtendedNat norm_k1 = ExtendedNat::infinity();
    if (strict) {
        if (p.coordinate != n)
            throw hypothesis_error(
                "patched code must designate its last coordinate for the ASDS glue; "
                "permute coordinates first");
        const PatchCheck check = check_norm_patched(p, limit);
        if (!check.valid)
            throw hypothesis_error("(S,T) is not a valid norm " +
                                   std::to_string(p.target_norm) + "-patched code: " +
                                   std::to_string(check.violations.size()) + " violations");
        if (k1.empty() || k2.empty())
            throw hypothesis_error("K1 and K2 must be nonempty in strict mode");
        norm_k1 = norm_at(k1, 1, p.mode, limit);
        if (norm_k1.is_infinite())
            throw hypothesis_error("K1 has infinite norm at coordinate 1");
        const ExtendedNat norm_k2 = norm_at(k2, 1, p.mode, limit);
        const std::uint64_t k2_bound = p.target_norm + norm_k1.finite() - 1;
        if (norm_k2 > ExtendedNat(k2_bound))
            throw hypothesis_error("K2 norm at coordinate 1 is " + norm_k2.str() +
                                   ", exceeds N + N' - 1 = " + std::to_string(k2_bound));
    }

    std::vector<std::uint64_t> masks;
    if (!p.s.empty()) {
        const Code left = ads_join(p.s, k1);
        masks.insert(masks.end(), left.masks().begin(), left.masks().end());
    }
    if (!p.t.empty()) {
        const Code right = ads_join(p.t, k2);
        masks.insert(masks.end(), right.masks().begin(), right.masks().end());
    }
    std::sort(masks.begin(), masks.end());
    masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
    Code result(n + k1.length() - 1, std::move(masks));

    if (strict && result.length() <= limit && !norm_k1.is_infinite()) {
        const std::uint64_t bound = p.target_norm + norm_k1.finite() - 1;
        const ExtendedNat glue_norm = norm_at(result, n, p.mode, limit);
        if (glue_norm > ExtendedNat(bound))
            throw std::logic_error("ASDS glue norm " + glue_norm.str() +
                                   " exceeds N + N' - 1 = " + std::to_string(bound));
    }
    return result;
}

}  // namespace covercraft
