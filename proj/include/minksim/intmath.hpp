#pragma once

// Exact integer arithmetic helpers for the synchronization rule.
// All interval computations stay in 128-bit integers; floating point is
// used only to seed the root search and every result is verified by
// integer comparison.

#include <cmath>
#include <cstdint>
#include <numeric>
#include <stdexcept>

namespace minksim {

using uint128 = unsigned __int128;

/// floor(sqrt(n)) for 128-bit n, exact.
inline std::uint64_t isqrt_floor(uint128 n) {
    if (n == 0) return 0;
    // Seed from long double, then fix up by integer comparison. The seed is
    // within a few ulps, so the loops below run at most a handful of times.
    long double approx = sqrtl(static_cast<long double>(n));
    std::uint64_t r = static_cast<std::uint64_t>(approx);
    while (r > 0 && static_cast<uint128>(r) * r > n) --r;
    while ((static_cast<uint128>(r) + 1) * (static_cast<uint128>(r) + 1) <= n) ++r;
    return r;
}

/// ceil(sqrt(n)): smallest integer s with s*s >= n.
inline std::uint64_t isqrt_ceil(uint128 n) {
    std::uint64_t f = isqrt_floor(n);
    return (static_cast<uint128>(f) * f == n) ? f : f + 1;
}

/// Positive rational number, normalized. Used for the node-per-cell ratio.
struct Rational {
    std::int64_t num = 1;
    std::int64_t den = 1;

    Rational() = default;
    Rational(std::int64_t n, std::int64_t d) : num(n), den(d) {
        if (n <= 0 || d <= 0) throw std::invalid_argument("Rational: must be positive");
        std::int64_t g = std::gcd(n, d);
        num /= g;
        den /= g;
    }

    double value() const { return static_cast<double>(num) / static_cast<double>(den); }
    bool is_one() const { return num == den; }
};

/// Best rational approximation of a positive double by continued fractions,
/// rejecting inputs that are not within 1e-9 (relative) of a fraction with a
/// denominator below the cap.
inline Rational rational_from_double(double x, std::int64_t max_den = 1000000) {
    if (!(x > 0) || !std::isfinite(x)) throw std::invalid_argument("rational_from_double: need finite positive value");
    std::int64_t p0 = 0, q0 = 1, p1 = 1, q1 = 0;
    double frac = x;
    for (int i = 0; i < 64; ++i) {
        double a_f = std::floor(frac);
        if (a_f > 9e17) break;
        std::int64_t a = static_cast<std::int64_t>(a_f);
        std::int64_t p2 = a * p1 + p0;
        std::int64_t q2 = a * q1 + q0;
        if (q2 > max_den) break;
        p0 = p1; q0 = q1; p1 = p2; q1 = q2;
        double rem = frac - a_f;
        if (rem < 1e-15) break;
        frac = 1.0 / rem;
    }
    if (p1 <= 0 || q1 <= 0) throw std::invalid_argument("rational_from_double: no positive convergent");
    double got = static_cast<double>(p1) / static_cast<double>(q1);
    if (std::abs(got - x) > 1e-9 * std::max(1.0, x))
        throw std::invalid_argument("rational_from_double: value is not a small rational");
    return Rational(p1, q1);
}

}  // namespace minksim
