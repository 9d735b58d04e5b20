#pragma once

/// Baseline Hill and Affine Hill block ciphers, the attack targets and
/// cost-model comparands. Message framing lives in the corecipher codec;
/// these operate on whole blocks only.

#include <cstdint>
#include <utility>

#include "thc/error.hpp"
#include "thc/modmath.hpp"
#include "thc/opcount.hpp"

namespace thc {

/// Invertible key matrix over Z_m (composite m such as 26 allowed).
class HillKey {
public:
    explicit HillKey(Matrix key) : key_(std::move(key)), key_inv_(mat_inv(key_)) {
        if (key_.rows() != key_.cols())
            throw DimensionMismatch("Hill key must be square");
    }

    const Matrix& key() const { return key_; }
    const Matrix& key_inverse() const { return key_inv_; }
    Residue modulus() const { return key_.modulus(); }
    std::size_t n() const { return key_.rows(); }

private:
    Matrix key_;
    Matrix key_inv_;
};

/// Invertible key matrix plus a fixed translation vector over Z_p, p prime.
class AffineHillKey {
public:
    AffineHillKey(Matrix key, RowVector v)
        : key_(std::move(key)), key_inv_(mat_inv(key_)), v_(std::move(v)) {
        if (!is_prime(key_.modulus()))
            throw NotPrime("Affine Hill requires a prime modulus");
        if (v_.size() != key_.rows())
            throw DimensionMismatch("translation vector length != n");
        if (v_.modulus() != key_.modulus())
            throw ModulusMismatch("translation vector modulus differs");
    }

    const Matrix& key() const { return key_; }
    const Matrix& key_inverse() const { return key_inv_; }
    const RowVector& v() const { return v_; }
    Residue modulus() const { return key_.modulus(); }
    std::size_t n() const { return key_.rows(); }

private:
    Matrix key_;
    Matrix key_inv_;
    RowVector v_;
};

/// Y = X K (mod m)
inline RowVector hill_encrypt_block(const RowVector& x, const HillKey& key,
                                    OpCount* tally = nullptr) {
    return vec_mat_mul(x, key.key(), tally);
}

/// X = Y K^{-1} (mod m)
inline RowVector hill_decrypt_block(const RowVector& y, const HillKey& key,
                                    OpCount* tally = nullptr) {
    return vec_mat_mul(y, key.key_inverse(), tally);
}

/// Y = X K + V (mod p)
inline RowVector affine_hill_encrypt_block(const RowVector& x,
                                           const AffineHillKey& key,
                                           OpCount* tally = nullptr) {
    RowVector y = vec_mat_mul(x, key.key(), tally);
    const Residue p = key.modulus();
    for (std::size_t i = 1; i <= y.size(); ++i)
        y.set(i, add_mod(y.at(i), key.v().at(i), p, tally));
    return y;
}

/// X = (Y - V) K^{-1} (mod p)
inline RowVector affine_hill_decrypt_block(const RowVector& y,
                                           const AffineHillKey& key,
                                           OpCount* tally = nullptr) {
    if (y.size() != key.n())
        throw DimensionMismatch("ciphertext block length != n");
    const Residue p = key.modulus();
    RowVector diff(key.n(), p);
    for (std::size_t i = 1; i <= key.n(); ++i)
        diff.set(i, sub_mod(y.at(i), key.v().at(i), p, tally));
    return vec_mat_mul(diff, key.key_inverse(), tally);
}

} // namespace thc
