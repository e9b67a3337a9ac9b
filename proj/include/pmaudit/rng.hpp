#pragma once

// Portable deterministic randomness. All synthetic data flows through
// splitmix64 (Steele, Lea & Flood 2014) so that a fixed seed reproduces the
// same byte stream on every platform: the generator and the samplers below use
// only integer operations and IEEE-754 double arithmetic in a fixed order, no
// libm calls.

#include <cstdint>

#include "pmaudit/core.hpp"

namespace pmaudit {

struct SplitMix64 {
    std::uint64_t state;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    /// Uniform double in [0, 1), 53 random bits.
    double next_double() { return double(next() >> 11) * 0x1.0p-53; }

    /// Uniform integer in [0, bound), rejection-sampled to avoid modulo bias.
    std::uint64_t below(std::uint64_t bound) {
        const std::uint64_t limit = bound * ((~std::uint64_t{0}) / bound);
        std::uint64_t r;
        do {
            r = next();
        } while (r >= limit);
        return r % bound;
    }

    /// Uniform integer in [lo, hi] inclusive.
    std::int64_t range(std::int64_t lo, std::int64_t hi) {
        return lo + std::int64_t(below(std::uint64_t(hi - lo + 1)));
    }
};

/// Derives an independent stream seed from (seed, index). Distinct indices map
/// to distinct splitmix inputs, which the scrambler then decorrelates.
inline std::uint64_t mix_stream(std::uint64_t seed, std::uint64_t index) {
    SplitMix64 g(seed + 0x9E3779B97F4A7C15ull * (index + 1));
    return g.next();
}

namespace detail {

/// exp(x) for x >= 0 by plain Taylor summation. Correct to ~1e-15 relative for
/// the x <= 700 range used here, and bit-reproducible across platforms because
/// it performs only ordered +,*,/ on doubles.
inline double exp_taylor(double x) {
    if (x < 0 || x > 700.0) fail("InvalidConfig", "exp_taylor domain is [0, 700]");
    double term = 1.0, sum = 1.0;
    for (int k = 1; k < 2000; ++k) {
        term *= x / double(k);
        sum += term;
        if (term < sum * 1e-18) break;
    }
    return sum;
}

} // namespace detail

/// Poisson sample by Knuth's product method. Mean must stay below ~700 so that
/// exp(mean) is representable; callers validate their rates.
inline std::uint32_t poisson(SplitMix64& rng, double mean) {
    if (mean < 0) fail("InvalidConfig", "poisson mean must be >= 0");
    if (mean == 0) return 0;
    const double floor_p = 1.0 / detail::exp_taylor(mean);
    std::uint32_t k = 0;
    double p = 1.0;
    do {
        ++k;
        p *= rng.next_double();
    } while (p > floor_p);
    return k - 1;
}

} // namespace pmaudit
