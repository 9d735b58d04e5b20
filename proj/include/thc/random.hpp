#pragma once

#include <cstdint>
#include <limits>
#include <random>

namespace thc {

/// Uniform draw from [0, bound) by rejection sampling.
///
/// std::uniform_int_distribution is implementation-defined; this sampler is
/// reproducible wherever mt19937_64 is, i.e. everywhere.
inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
    const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
    const std::uint64_t limit = max - max % bound;
    std::uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return x % bound;
}

/// Uniform draw from the closed range [lo, hi].
inline std::uint64_t uniform_range(std::mt19937_64& rng, std::uint64_t lo,
                                   std::uint64_t hi) {
    return lo + uniform_below(rng, hi - lo + 1);
}

} // namespace thc
