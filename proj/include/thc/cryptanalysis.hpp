#pragma once

/// Known-plaintext attack on the plain Hill cipher (K = Xs^{-1} Ys from n
/// pairs) and an empirical demonstration that the same attack yields nothing
/// against the hash-chained variant: the recovered matrix is scored on
/// held-out blocks, not on the training pairs.

#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "thc/classic.hpp"
#include "thc/corecipher.hpp"
#include "thc/error.hpp"
#include "thc/modmath.hpp"
#include "thc/random.hpp"

namespace thc {

struct PlainCipherPair {
    RowVector x;
    RowVector y;
};

/// Outcome of one attack experiment. `recovered` says whether the linear
/// system was solvable at all; the held-out counters say how many blocks
/// beyond the training pairs the candidate key decrypts correctly.
struct AttackReport {
    bool recovered = false;
    std::size_t heldout_total = 0;
    std::size_t heldout_correct = 0;

    double heldout_fraction() const {
        return heldout_total == 0
                   ? 0.0
                   : static_cast<double>(heldout_correct) / heldout_total;
    }
};

/// Solves K from exactly n (plaintext, ciphertext) pairs of a plain Hill
/// cipher: K = Xs^{-1} Ys (mod m) with the pairs stacked as matrix rows.
/// Throws SingularSystem when the stacked plaintext is not invertible.
inline Matrix kpa_recover_hill_key(const std::vector<PlainCipherPair>& pairs,
                                   Residue m) {
    if (pairs.empty()) throw DimensionMismatch("no pairs supplied");
    const std::size_t n = pairs.size();
    Matrix xs(n, n, m), ys(n, n, m);
    for (std::size_t i = 1; i <= n; ++i) {
        const auto& [x, y] = pairs[i - 1];
        if (x.size() != n || y.size() != n)
            throw DimensionMismatch("pair length does not match pair count");
        if (x.modulus() != m || y.modulus() != m)
            throw ModulusMismatch("pair modulus differs");
        for (std::size_t j = 1; j <= n; ++j) {
            xs.set(i, j, x.at(j));
            ys.set(i, j, y.at(j));
        }
    }
    if (!is_valid_key(xs))
        throw SingularSystem("stacked plaintext matrix is singular");
    return mat_mul(mat_inv(xs), ys);
}

namespace detail {

// Feeds the first n (plaintext, ciphertext) block pairs to the Hill KPA and
// scores the candidate key on the remaining blocks.
inline AttackReport score_kpa(const std::vector<RowVector>& plain_blocks,
                              const std::vector<RowVector>& cipher_blocks,
                              std::size_t n, Residue m) {
    AttackReport report;
    report.heldout_total = plain_blocks.size() - n;
    std::vector<PlainCipherPair> pairs;
    pairs.reserve(n);
    for (std::size_t t = 0; t < n; ++t)
        pairs.push_back({plain_blocks[t], cipher_blocks[t]});
    try {
        const Matrix candidate = kpa_recover_hill_key(pairs, m);
        report.recovered = true;
        if (!is_valid_key(candidate)) return report;
        const HillKey as_hill(candidate);
        for (std::size_t t = n; t < plain_blocks.size(); ++t)
            if (hill_decrypt_block(cipher_blocks[t], as_hill) == plain_blocks[t])
                ++report.heldout_correct;
    } catch (const SingularSystem&) {
    }
    return report;
}

} // namespace detail

/// Encrypts `message` under the hash-chained variant, then attacks the first
/// n block pairs as if they came from a plain Hill cipher. The message must
/// span at least 2n blocks so there is something to hold out.
inline AttackReport kpa_demo_variant(const CipherParams& params,
                                     std::span<const std::uint8_t> message,
                                     std::mt19937_64& rng,
                                     HashAlg alg = HashAlg::Sha256) {
    const std::size_t n = params.n();
    const auto plain_blocks = encode_message(message, n, params.p());
    if (plain_blocks.size() < 2 * n)
        throw LengthMismatch("message must span at least 2n blocks");
    const auto a0 = static_cast<Residue>(uniform_range(rng, 1, params.p() - 2));
    const MessageCiphertext ct = encrypt_message(message, params, a0, alg);
    return detail::score_kpa(plain_blocks, ct.blocks, n, params.p());
}

/// Control experiment: the same attack against a genuine Hill cipher, where
/// recovery is exact and every held-out block decrypts correctly. Takes
/// plaintext blocks directly so it also runs at byte-codec-free moduli
/// such as m = 26.
inline AttackReport kpa_demo_hill(const HillKey& key,
                                  const std::vector<RowVector>& plain_blocks) {
    const std::size_t n = key.n();
    if (plain_blocks.size() < 2 * n)
        throw LengthMismatch("need at least 2n plaintext blocks");
    std::vector<RowVector> cipher_blocks;
    cipher_blocks.reserve(plain_blocks.size());
    for (const auto& x : plain_blocks)
        cipher_blocks.push_back(hill_encrypt_block(x, key));
    return detail::score_kpa(plain_blocks, cipher_blocks, n, key.modulus());
}

} // namespace thc
