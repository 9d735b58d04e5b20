#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "thc/modmath.hpp"
#include "thc/random.hpp"

namespace testutil {

inline thc::Matrix random_matrix(std::mt19937_64& rng, std::size_t n,
                                 thc::Residue m) {
    thc::Matrix a(n, n, m);
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = 1; j <= n; ++j)
            a.set(i, j, thc::uniform_below(rng, m));
    return a;
}

inline thc::Matrix random_invertible_matrix(std::mt19937_64& rng, std::size_t n,
                                            thc::Residue m) {
    for (;;) {
        thc::Matrix a = random_matrix(rng, n, m);
        if (thc::is_valid_key(a)) return a;
    }
}

inline thc::RowVector random_vector(std::mt19937_64& rng, std::size_t n,
                                    thc::Residue m) {
    thc::RowVector v(n, m);
    for (std::size_t i = 1; i <= n; ++i) v.set(i, thc::uniform_below(rng, m));
    return v;
}

inline std::vector<std::uint8_t> random_bytes(std::mt19937_64& rng,
                                              std::size_t len) {
    std::vector<std::uint8_t> out(len);
    for (auto& b : out) b = static_cast<std::uint8_t>(rng());
    return out;
}

} // namespace testutil
