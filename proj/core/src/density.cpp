#include "covercraft/density.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

#include "covercraft/constructions.hpp"

namespace covercraft {

namespace {

constexpr long double kE = 2.718281828459045235360287471352662498L;

long double mode_constant(Mode mode) { return mode == Mode::symmetric ? 4.0L : 3.0L; }

// c (1+x) e^{-x} R^R, evaluated as exp(R ln R - x) to keep both of the
// extreme factors in range for R up to the mid-double-digits.
long double root_lhs(long double x, unsigned radius, long double c) {
    const long double r = static_cast<long double>(radius);
    return c * (1 + x) * std::exp(r * std::log(r) - x);
}

ExtendedNat mode_radius(const Code& c, Mode mode, unsigned limit) {
    return mode == Mode::symmetric ? covering_radius(c, limit) : asym_covering_radius(c, limit);
}

void require_normal_companion(const Code& code, unsigned expected_len,
                              std::uint64_t expected_radius, Mode mode, unsigned limit,
                              const char* role) {
    if (code.length() != expected_len)
        throw hypothesis_error(std::string(role) + " must have length " +
                               std::to_string(expected_len) + ", got " +
                               std::to_string(code.length()));
    const ExtendedNat radius = mode_radius(code, mode, limit);
    if (radius != ExtendedNat(expected_radius))
        throw hypothesis_error(std::string(role) + " must have covering radius " +
                               std::to_string(expected_radius) + ", got " + radius.str());
    const NormalityCheck check = is_normal(code, radius, mode, limit);
    if (!check.normal)
        throw hypothesis_error(std::string(role) + " is not normal (min norm " +
                               check.min_norm.str() + ")");
    const ExtendedNat glue = norm_at(code, 1, mode, limit);
    if (glue > ExtendedNat(2 * expected_radius + 1))
        throw hypothesis_error(std::string(role) + " first coordinate not acceptable: norm " +
                               glue.str() + " exceeds " +
                               std::to_string(2 * expected_radius + 1));
}

}  // namespace

Rational sphere_bound(unsigned n, unsigned radius) {
    if (n < 1 || n > 63) throw std::invalid_argument("sphere bound needs 1 <= n <= 63");
    if (radius > n) throw std::invalid_argument("radius exceeds length");
    Rational r;
    r.num = std::uint64_t{1} << n;
    r.den = binom_sum(n, static_cast<int>(radius));
    const std::uint64_t g = std::gcd(r.num, r.den);
    r.num /= g;
    r.den /= g;
    return r;
}

DensityReport density(const Code& c, std::uint64_t radius, Mode mode, unsigned limit) {
    DensityReport report;
    report.n = c.length();
    report.radius = radius;
    report.mode = mode;
    report.code_size = c.size();
    report.computed_radius = mode_radius(c, mode, limit);
    report.radius_matches = (report.computed_radius == ExtendedNat(radius));

    const unsigned ball_n = mode == Mode::symmetric ? c.length() : c.length() / 2;
    const long double ball = static_cast<long double>(binom_sum(ball_n, static_cast<int>(radius)));
    const long double cube = std::ldexp(1.0L, static_cast<int>(c.length()));
    report.denominator = cube / ball;
    report.density = static_cast<long double>(c.size()) / report.denominator;
    return report;
}

long double f_objective(long double x, unsigned radius, Mode mode) {
    const long double c = mode_constant(mode);
    const long double r = static_cast<long double>(radius);
    const long double damping = c * std::exp(r * std::log(r) - x);
    if (damping >= 1)
        throw std::invalid_argument("f(x) undefined: requires " +
                                    std::to_string(static_cast<int>(c)) +
                                    " e^{-x} R^R < 1 at x=" + std::to_string((double)x));
    return kE * x / (1 - damping);
}

long double x0_root(unsigned radius, Mode mode) {
    if (radius < 2) throw std::invalid_argument("x0 root is defined for R >= 2");
    const long double c = mode_constant(mode);
    const long double r = static_cast<long double>(radius);

    // g(x) = 1 - c (1+x) e^{-x} R^R is negative at 0 and strictly
    // increasing for x > 0 (g' = c R^R x e^{-x}), so a sign change
    // brackets the unique positive root.
    auto g = [&](long double x) { return 1 - root_lhs(x, radius, c); };
    long double lo = 0;
    long double hi = r * std::log(r) + std::log(r) + std::log(std::log(r) + 1e-9L) + 4;
    while (g(hi) <= 0) hi *= 2;
    if (!(g(lo) < 0))
        throw std::runtime_error("x0 bracketing failed: g(0) >= 0 at R=" + std::to_string(radius));

    for (int iter = 0; iter < 200; ++iter) {
        const long double mid = (lo + hi) / 2;
        (g(mid) < 0 ? lo : hi) = mid;
    }
    long double x = (lo + hi) / 2;
    // Newton polish: g'(x) = c R^R x e^{-x}.
    for (int iter = 0; iter < 4; ++iter) {
        const long double gp = c * x * std::exp(r * std::log(r) - x);
        if (gp <= 0) break;
        x -= g(x) / gp;
    }
    const long double residual = std::fabs(g(x));
    if (!(residual < 1e-12L))
        throw std::runtime_error("x0 root did not converge: residual " +
                                 std::to_string((double)residual) + " on bracket [" +
                                 std::to_string((double)lo) + ", " + std::to_string((double)hi) +
                                 "]");
    return x;
}

BoundReport closed_form_bound(unsigned radius, Mode mode) {
    BoundReport report;
    report.radius = radius;
    report.mode = mode;
    report.x0 = x0_root(radius, mode);
    report.f_at_x0 = kE * (report.x0 + 1);
    const long double r = static_cast<long double>(radius);
    report.closed_form = kE * (r * std::log(r) + std::log(r) + std::log(std::log(r)) + 4);
    if (report.f_at_x0 > report.closed_form)
        throw std::logic_error("e(x0+1) exceeds the closed-form bound at R=" +
                               std::to_string(radius));
    return report;
}

bool bound_guess_clears_root(unsigned radius) {
    const long double r = static_cast<long double>(radius);
    const long double guess = r * std::log(r) + std::log(r) + std::log(std::log(r)) + 3;
    // Compare in log space: x > ln 4 + ln(1+x) + R ln R.
    return guess > std::log(4.0L) + std::log(1 + guess) + r * std::log(r);
}

RecursionLimits ads_recursion_limits(unsigned radius, long double x, Mode mode) {
    if (radius < 2) throw std::invalid_argument("recursion limits are defined for R >= 2");
    const long double r = static_cast<long double>(radius);
    RecursionLimits limits;
    limits.a_limsup = x * std::pow(r / (r - 1), r - 1);
    limits.a_cap = kE * x;
    limits.b_limsup = mode_constant(mode) * std::exp(r * std::log(r) - x);
    return limits;
}

RecursiveBuild recursive_construct(unsigned n, unsigned radius, long double x, Mode mode,
                                   std::uint64_t seed, const Code& k1, const Code& k2,
                                   unsigned limit) {
    if (radius < 2) throw std::invalid_argument("recursive construction needs R >= 2");
    if (n < radius) throw std::invalid_argument("recursive construction needs n >= R");

    RecursiveBuild build;
    build.n1 = n / radius;
    build.n1prime = n - build.n1 + 1;
    if (build.n1 < 2)
        throw std::invalid_argument("companion length floor(n/R) must be at least 2");

    require_normal_companion(k1, build.n1, 1, mode, limit, "K1");
    require_normal_companion(k2, build.n1, radius, mode, limit, "K2");

    PatchSampleParams params;
    params.n = build.n1prime;
    params.target_norm = 2 * radius - 1;
    params.x = x;
    params.rare_radius = radius;
    params.seed = seed;
    params.mode = mode;
    build.patched = sample_patched(params, limit);
    build.k = k_value(params.n, params.target_norm, params.x, params.mode, params.rare_radius);

    build.code = asds(build.patched, k1, k2, /*strict=*/true, limit);

    build.radius = mode_radius(build.code, mode, limit);
    if (build.radius > ExtendedNat(radius))
        throw std::logic_error("recursive construction produced radius " + build.radius.str() +
                               " above the target " + std::to_string(radius));
    build.normality = is_normal(build.code, build.radius, mode, limit);
    build.density = density(build.code, build.radius.finite(), mode, limit);
    return build;
}

}  // namespace covercraft
