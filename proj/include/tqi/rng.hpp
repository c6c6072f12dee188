#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace tqi {

// Seeded randomness helpers. Distributions are hand-rolled because the
// standard library distribution objects are implementation-defined, which
// would break byte-for-byte reproducibility of seeded runs across toolchains.

inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
    // Rejection sampling on the top of the range keeps the draw unbiased.
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t v;
    do {
        v = rng();
    } while (v >= limit);
    return v % bound;
}

inline double uniform_unit(std::mt19937_64& rng) {
    return double(rng() >> 11) * 0x1.0p-53;
}

inline double gaussian(std::mt19937_64& rng) {
    // Box-Muller; one value per call keeps the state sequence simple.
    double u1 = uniform_unit(rng), u2 = uniform_unit(rng);
    if (u1 < 1e-300) u1 = 1e-300;
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586477 * u2);
}

}  // namespace tqi
