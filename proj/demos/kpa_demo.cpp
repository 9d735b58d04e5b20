// Side-by-side known-plaintext attack: the plain Hill cipher falls to n
// pairs, the hash-chained variant does not.

#include <cstdio>
#include <random>

#include "thc/cryptanalysis.hpp"

int main() {
    using namespace thc;

    std::mt19937_64 rng(7);
    const std::size_t n = 4;
    const Residue p = 257;

    auto random_key = [&] {
        Matrix key(n, n, p);
        do {
            for (std::size_t i = 1; i <= n; ++i)
                for (std::size_t j = 1; j <= n; ++j)
                    key.set(i, j, uniform_below(rng, p));
        } while (!is_valid_key(key));
        return key;
    };

    std::vector<RowVector> blocks;
    for (std::size_t t = 0; t < 4 * n; ++t) {
        RowVector x(n, p);
        for (std::size_t i = 1; i <= n; ++i) x.set(i, uniform_below(rng, p));
        blocks.push_back(std::move(x));
    }
    const AttackReport hill = kpa_demo_hill(HillKey(random_key()), blocks);
    std::printf("plain hill:  recovered=%d heldout %zu/%zu\n", hill.recovered,
                hill.heldout_correct, hill.heldout_total);

    const CipherParams params(p, n, random_key());
    std::vector<std::uint8_t> message(4 * n * n);
    for (auto& b : message) b = static_cast<std::uint8_t>(rng());
    const AttackReport variant = kpa_demo_variant(params, message, rng);
    std::printf("variant:     recovered=%d heldout %zu/%zu\n", variant.recovered,
                variant.heldout_correct, variant.heldout_total);
    return 0;
}
