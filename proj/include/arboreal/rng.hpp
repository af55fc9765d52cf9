#pragma once

#include <cstdint>
#include <random>

namespace arboreal {

// Portable helpers on top of mt19937_64. The standard distributions are
// implementation-defined, so seeded output would differ across toolchains.

inline std::uint64_t uniformBelow(std::mt19937_64& rng, std::uint64_t bound)
{
    if (bound <= 1)
        return 0;
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return x % bound;
}

inline double uniformUnit(std::mt19937_64& rng)
{
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

} // namespace arboreal
