#pragma once

/// Ciphering core: half-fold compression, the per-block noise vector V,
/// the block transform Y = v0*X*K + V (mod p) and its inverse, plus the
/// byte codec and the message-level chain walk.

#include <bit>
#include <cstdint>
#include <span>
#include <vector>

#include "thc/error.hpp"
#include "thc/hashchain.hpp"
#include "thc/modmath.hpp"
#include "thc/opcount.hpp"

namespace thc {

/// Session parameters: prime modulus p, dimension n >= 2, and an invertible
/// key matrix K over Z_p. The inverse key is computed once up front, so
/// per-block decryption never pays for it.
class CipherParams {
public:
    CipherParams(Residue p, std::size_t n, Matrix key)
        : p_(p), n_(n), key_(std::move(key)), key_inv_(mat_inv(key_)) {
        if (!is_prime(p)) throw NotPrime(std::to_string(p) + " is not prime");
        if (n < 2) throw InvalidParams("dimension must be >= 2");
        if (key_.rows() != n || key_.cols() != n)
            throw DimensionMismatch("key matrix must be n x n");
        if (key_.modulus() != p)
            throw ModulusMismatch("key matrix modulus differs from p");
    }

    Residue p() const { return p_; }
    std::size_t n() const { return n_; }
    const Matrix& key() const { return key_; }
    const Matrix& key_inverse() const { return key_inv_; }

private:
    Residue p_;
    std::size_t n_;
    Matrix key_;
    Matrix key_inv_;
};

/// Per-block secrets derived from the chain: the invertible scalar v0 and
/// the noise vector V.
struct BlockContext {
    Residue v0;
    RowVector noise;
    std::uint64_t t;
};

struct MessageCiphertext {
    std::vector<RowVector> blocks;
    std::uint64_t plain_len = 0;

    bool operator==(const MessageCiphertext&) const = default;
};

/// ceil(plain_len / n) without intermediate overflow.
inline std::uint64_t block_count_for(std::uint64_t plain_len, std::uint64_t n) {
    return plain_len == 0 ? 0 : (plain_len - 1) / n + 1;
}

/// MQV-style half fold: with gamma the bit-length of v (gamma(0) := 1, the
/// one total extension of floor(log2 v) + 1) and h = ceil(gamma/2), returns
/// 2^h + (v mod 2^h) -- the low half of v's bits under a forced top bit.
inline std::uint64_t half_fold(std::uint64_t v) {
    const unsigned gamma = v == 0 ? 1u : static_cast<unsigned>(std::bit_width(v));
    const unsigned h = (gamma + 1) / 2;
    return (std::uint64_t{1} << h) + (v & ((std::uint64_t{1} << h) - 1));
}

/// Noise vector recursion seeded with v0:
///   v_i = k_{i,j} + half_fold(v_{i-1}) * a_t (mod p),  j = (v_{i-1} mod n) + 1
/// for i = 1..n. Both j and the half fold consume the reduced previous
/// value; a_t enters the product unreduced (the product is reduced mod p,
/// which leaves the residue unchanged).
inline RowVector gen_noise_vector(const CipherParams& params, const BigInt& a_t,
                                  Residue v0, OpCount* tally = nullptr) {
    const Residue p = params.p();
    const std::size_t n = params.n();
    if (v0 < 1 || v0 >= p) throw InvalidParams("v0 out of [1, p-1]");
    const Residue a_red = detail::reduce_bigint(a_t, p);
    RowVector noise(n, p);
    Residue prev = v0;
    for (std::size_t i = 1; i <= n; ++i) {
        const std::size_t j = prev % n + 1;
        const std::uint64_t folded = half_fold(prev);
        const Residue v =
            add_mod(params.key().at(i, j), mul_mod(folded, a_red, p, tally), p, tally);
        noise.set(i, v);
        prev = v;
    }
    return noise;
}

/// Y = v0 * X * K + V (mod p)
inline RowVector encrypt_block(const RowVector& x, const CipherParams& params,
                               const BlockContext& ctx, OpCount* tally = nullptr) {
    if (x.size() != params.n())
        throw DimensionMismatch("plaintext block length != n");
    const Residue p = params.p();
    RowVector xk = vec_mat_mul(x, params.key(), tally);
    RowVector y(params.n(), p);
    for (std::size_t i = 1; i <= params.n(); ++i)
        y.set(i, add_mod(mul_mod(ctx.v0, xk.at(i), p, tally), ctx.noise.at(i), p,
                         tally));
    return y;
}

/// X = v0^{-1} * (Y - V) * K^{-1} (mod p)
inline RowVector decrypt_block(const RowVector& y, const CipherParams& params,
                               const BlockContext& ctx, OpCount* tally = nullptr) {
    if (y.size() != params.n())
        throw DimensionMismatch("ciphertext block length != n");
    const Residue p = params.p();
    const Residue v0_inv = mod_inv(ctx.v0, p, tally);
    RowVector diff(params.n(), p);
    for (std::size_t i = 1; i <= params.n(); ++i)
        diff.set(i, sub_mod(y.at(i), ctx.noise.at(i), p, tally));
    RowVector xk = vec_mat_mul(diff, params.key_inverse(), tally);
    RowVector x(params.n(), p);
    for (std::size_t i = 1; i <= params.n(); ++i)
        x.set(i, mul_mod(v0_inv, xk.at(i), p, tally));
    return x;
}

// ---------------------------------------------------------------------------
// Byte codec: one byte per symbol, final partial block zero-padded. Requires
// p >= 257 so the encoding is injective.
// ---------------------------------------------------------------------------

inline std::vector<RowVector> encode_message(std::span<const std::uint8_t> bytes,
                                             std::size_t n, Residue p) {
    if (p < 257)
        throw ModulusTooSmall("byte codec requires p >= 257, got " +
                              std::to_string(p));
    std::vector<RowVector> blocks;
    blocks.reserve((bytes.size() + n - 1) / n);
    for (std::size_t off = 0; off < bytes.size(); off += n) {
        RowVector block(n, p);
        for (std::size_t i = 0; i < n && off + i < bytes.size(); ++i)
            block.set(i + 1, bytes[off + i]);
        blocks.push_back(std::move(block));
    }
    return blocks;
}

inline std::vector<std::uint8_t> decode_message(
    const std::vector<RowVector>& blocks, std::uint64_t plain_len) {
    const std::size_t n = blocks.empty() ? 0 : blocks.front().size();
    if (plain_len > n * blocks.size())
        throw LengthMismatch("plain_len exceeds decoded capacity");
    std::vector<std::uint8_t> bytes;
    bytes.reserve(plain_len);
    for (const auto& block : blocks) {
        for (std::size_t i = 1; i <= block.size(); ++i) {
            if (bytes.size() == plain_len) return bytes;
            const Residue sym = block.at(i);
            if (sym > 0xFF)
                throw SymbolOutOfRange("symbol " + std::to_string(sym) +
                                       " is not a byte");
            bytes.push_back(static_cast<std::uint8_t>(sym));
        }
    }
    return bytes;
}

// ---------------------------------------------------------------------------
// Message-level walk: block t consumes chain state t exactly; encrypt and
// decrypt step identical chains from the shared a0.
// ---------------------------------------------------------------------------

namespace detail {

inline void check_a0(Residue a0, Residue p) {
    if (a0 == 0 || a0 >= p - 1)
        throw InvalidParams("a0 must satisfy 0 < a0 < p-1");
}

// Derives block t's context from chain state t.
inline BlockContext block_context(const CipherParams& params, const ChainState& s,
                                  OpCount* tally) {
    const Residue v0 = derive_v0(s.a, params.p(), tally);
    return BlockContext{v0, gen_noise_vector(params, s.a, v0, tally), s.t};
}

} // namespace detail

inline MessageCiphertext encrypt_message(std::span<const std::uint8_t> plaintext,
                                         const CipherParams& params, Residue a0,
                                         HashAlg alg = HashAlg::Sha256,
                                         OpTrace* trace = nullptr) {
    detail::check_a0(a0, params.p());
    MessageCiphertext ct;
    ct.plain_len = plaintext.size();
    auto blocks = encode_message(plaintext, params.n(), params.p());
    ct.blocks.reserve(blocks.size());
    ChainState s{BigInt(a0), 0, alg};
    OpCount acc;
    OpCount* tally = trace ? &acc : nullptr;
    for (const auto& x : blocks) {
        const OpCount before = acc;
        s = chain_next(s, tally);
        const BlockContext ctx = detail::block_context(params, s, tally);
        ct.blocks.push_back(encrypt_block(x, params, ctx, tally));
        if (trace) trace->push_back(acc - before);
    }
    return ct;
}

inline std::vector<std::uint8_t> decrypt_message(const MessageCiphertext& ct,
                                                 const CipherParams& params,
                                                 Residue a0,
                                                 HashAlg alg = HashAlg::Sha256,
                                                 OpTrace* trace = nullptr) {
    detail::check_a0(a0, params.p());
    const std::size_t n = params.n();
    if (ct.blocks.size() != block_count_for(ct.plain_len, n))
        throw LengthMismatch("block count does not match plaintext length");
    std::vector<RowVector> plain_blocks;
    plain_blocks.reserve(ct.blocks.size());
    ChainState s{BigInt(a0), 0, alg};
    OpCount acc;
    OpCount* tally = trace ? &acc : nullptr;
    for (const auto& y : ct.blocks) {
        if (y.modulus() != params.p())
            throw ModulusMismatch("ciphertext block modulus differs from p");
        const OpCount before = acc;
        s = chain_next(s, tally);
        const BlockContext ctx = detail::block_context(params, s, tally);
        plain_blocks.push_back(decrypt_block(y, params, ctx, tally));
        if (trace) trace->push_back(acc - before);
    }
    return decode_message(plain_blocks, ct.plain_len);
}

} // namespace thc
