#include "covercraft/radius_norm.hpp"

#include <algorithm>
#include <stdexcept>

#include "covercraft/distance_transform.hpp"
#include "covercraft/parallel.hpp"

namespace covercraft {

namespace {

ExtendedNat from_table(std::uint8_t d) {
    return d == kUnreachable ? ExtendedNat::infinity() : ExtendedNat(d);
}

void check_coordinate(unsigned i, unsigned n) {
    if (i < 1 || i > n)
        throw std::invalid_argument("coordinate " + std::to_string(i) +
                                    " out of range [1, " + std::to_string(n) + "]");
}

// Masks of the two coordinate-i halves of a code.
std::pair<std::vector<std::uint64_t>, std::vector<std::uint64_t>> split(const Code& c,
                                                                        unsigned i) {
    const unsigned shift = c.length() - i;
    std::pair<std::vector<std::uint64_t>, std::vector<std::uint64_t>> halves;
    for (std::uint64_t m : c.masks())
        (((m >> shift) & 1u) ? halves.second : halves.first).push_back(m);
    return halves;
}

ExtendedNat sum_or_inf(std::uint8_t a, std::uint8_t b) {
    if (a == kUnreachable || b == kUnreachable) return ExtendedNat::infinity();
    return ExtendedNat(static_cast<std::uint64_t>(a) + b);
}

}  // namespace

ExtendedNat covering_radius(const Code& c, unsigned limit) {
    if (c.empty()) return ExtendedNat::infinity();
    require_exhaustive(c.length(), limit);
    const auto dist = distance_table(c.length(), c.masks());
    std::uint8_t worst = 0;
    for (std::uint8_t d : dist) worst = std::max(worst, d);
    return from_table(worst);
}

ExtendedNat asym_covering_radius(const Code& c, unsigned limit) {
    if (c.empty()) return ExtendedNat::infinity();
    require_exhaustive(c.length(), limit);
    const auto dist = dominator_distance_table(c.length(), c.masks());
    std::uint8_t worst = 0;
    for (std::uint8_t d : dist) worst = std::max(worst, d);
    return from_table(worst);
}

ExtendedNat norm_at(const Code& c, unsigned i, unsigned limit) {
    check_coordinate(i, c.length());
    require_exhaustive(c.length(), limit);
    const auto [c0, c1] = split(c, i);
    if (c0.empty() || c1.empty()) return ExtendedNat::infinity();
    const auto d0 = distance_table(c.length(), c0);
    const auto d1 = distance_table(c.length(), c1);
    std::uint64_t worst = 0;
    for (std::size_t x = 0; x < d0.size(); ++x)
        worst = std::max(worst, static_cast<std::uint64_t>(d0[x]) + d1[x]);
    return ExtendedNat(worst);
}

ExtendedNat asym_norm_at(const Code& c, unsigned i, unsigned limit) {
    check_coordinate(i, c.length());
    require_exhaustive(c.length(), limit);
    const unsigned n = c.length();
    const auto [c0, c1] = split(c, i);
    const auto d0 = dominator_distance_table(n, c0);
    const auto d1 = dominator_distance_table(n, c1);
    const std::uint64_t coord_bit = std::uint64_t{1} << (n - i);
    ExtendedNat worst{0};
    for (std::size_t x = 0; x < d0.size(); ++x) {
        ExtendedNat value = (x & coord_bit)
                                ? (d1[x] == kUnreachable
                                       ? ExtendedNat::infinity()
                                       : ExtendedNat(2 * static_cast<std::uint64_t>(d1[x]) + 1))
                                : sum_or_inf(d0[x], d1[x]);
        worst = std::max(worst, value);
        if (worst.is_infinite()) break;
    }
    return worst;
}

ExtendedNat norm_at(const Code& c, unsigned i, Mode mode, unsigned limit) {
    return mode == Mode::symmetric ? norm_at(c, i, limit) : asym_norm_at(c, i, limit);
}

NormReport norm_report(const Code& c, Mode mode, std::uint64_t threshold, unsigned limit) {
    require_exhaustive(c.length(), limit);
    NormReport report;
    report.mode = mode;
    report.threshold = threshold;
    report.per_coordinate.assign(c.length(), ExtendedNat::infinity());
    parallel_chunks(c.length(), [&](std::size_t begin, std::size_t end) {
        for (std::size_t idx = begin; idx < end; ++idx)
            report.per_coordinate[idx] =
                norm_at(c, static_cast<unsigned>(idx + 1), mode, limit);
    });
    report.min_norm = ExtendedNat::infinity();
    for (unsigned i = 1; i <= c.length(); ++i) {
        const ExtendedNat value = report.per_coordinate[i - 1];
        report.min_norm = std::min(report.min_norm, value);
        if (value <= ExtendedNat(threshold)) report.acceptable.push_back(i);
    }
    return report;
}

NormalityCheck is_normal(const Code& c, ExtendedNat radius, Mode mode, unsigned limit) {
    NormalityCheck check;
    check.supplied_radius = radius;
    check.computed_radius =
        mode == Mode::symmetric ? covering_radius(c, limit) : asym_covering_radius(c, limit);
    check.radius_matches = (check.computed_radius == radius);
    check.min_norm = ExtendedNat::infinity();
    for (unsigned i = 1; i <= c.length(); ++i)
        check.min_norm = std::min(check.min_norm, norm_at(c, i, mode, limit));
    if (check.computed_radius.is_infinite() || check.min_norm.is_infinite()) return check;
    const std::uint64_t r = check.computed_radius.finite();
    const std::uint64_t nm = check.min_norm.finite();
    check.normal = (nm == 2 * r) || (nm == 2 * r + 1);
    return check;
}

bool is_balanced(const Code& c, unsigned i) {
    check_coordinate(i, c.length());
    const auto [c0, c1] = split(c, i);
    return c0.size() == c1.size();
}

Code missed_vectors(const Code& s, unsigned i, std::uint64_t target_norm, Mode mode,
                    unsigned limit) {
    check_coordinate(i, s.length());
    require_exhaustive(s.length(), limit);
    const unsigned n = s.length();
    const auto [s0, s1] = split(s, i);
    const ExtendedNat bound{target_norm};
    std::vector<std::uint64_t> missed;

    if (mode == Mode::symmetric) {
        const auto d0 = distance_table(n, s0);
        const auto d1 = distance_table(n, s1);
        for (std::size_t x = 0; x < d0.size(); ++x)
            if (sum_or_inf(d0[x], d1[x]) > bound) missed.push_back(x);
    } else {
        const auto d0 = dominator_distance_table(n, s0);
        const auto d1 = dominator_distance_table(n, s1);
        const std::uint64_t coord_bit = std::uint64_t{1} << (n - i);
        for (std::size_t x = 0; x < d0.size(); ++x) {
            if (x & coord_bit) {
                if (d1[x] == kUnreachable || 2 * static_cast<std::uint64_t>(d1[x]) + 1 > target_norm)
                    missed.push_back(x);
            } else {
                if (sum_or_inf(d0[x], d1[x]) > bound) missed.push_back(x);
            }
        }
    }
    return Code(n, std::move(missed));
}

PatchCheck check_norm_patched(const PatchedCode& p, unsigned limit) {
    if (p.s.length() != p.t.length())
        throw std::invalid_argument("patched code parts must have equal lengths");
    check_coordinate(p.coordinate, p.s.length());
    const unsigned n = p.s.length();
    require_exhaustive(n, limit);

    const Code missed = missed_vectors(p.s, p.coordinate, p.target_norm, p.mode, limit);
    const std::uint64_t coord_bit = std::uint64_t{1} << (n - p.coordinate);

    PatchCheck result;
    for (std::uint64_t x : missed.masks()) {
        const bool one_branch = (p.mode == Mode::asymmetric) && (x & coord_bit);
        const bool absorbed = one_branch
                                  ? p.t.contains(x)
                                  : (p.t.contains(x) && p.t.contains(x ^ coord_bit));
        if (!absorbed) result.violations.emplace_back(n, x);
    }
    result.valid = result.violations.empty();
    return result;
}

}  // namespace covercraft
