#pragma once

/// Per-block random-number chain a_t = H(a_{t-1}) and the block scalar v0.
///
/// The hash input encoding is fixed as minimal big-endian bytes and the
/// digest is read back as a big-endian integer, so chains are endian-stable
/// and checkable against standard digest test vectors. The chain carries the
/// full digest integer between steps; reduction mod p happens only when the
/// block scalar is derived.

#include <openssl/evp.h>

#include <cstdint>
#include <string>
#include <vector>

#include "thc/error.hpp"
#include "thc/modmath.hpp"
#include "thc/opcount.hpp"

namespace thc {

/// Wire identifiers: 0x01 = SHA-1, 0x02 = MD5, 0x03 = SHA-256.
enum class HashAlg : std::uint8_t {
    Sha1 = 0x01,
    Md5 = 0x02,
    Sha256 = 0x03,
};

inline const char* hash_alg_name(HashAlg alg) {
    switch (alg) {
        case HashAlg::Sha1: return "sha1";
        case HashAlg::Md5: return "md5";
        case HashAlg::Sha256: return "sha256";
    }
    throw InvalidParams("unknown hash algorithm id");
}

inline HashAlg hash_alg_from_name(const std::string& name) {
    if (name == "sha1") return HashAlg::Sha1;
    if (name == "md5") return HashAlg::Md5;
    if (name == "sha256") return HashAlg::Sha256;
    throw InvalidParams("unknown hash algorithm: " + name);
}

/// Per-invocation operation counts used by the cost model: 1110 for SHA-1
/// and 744 for MD5. SHA-256 has no comparable count and reuses the SHA-1
/// value as a placeholder; cost-model callers can override it.
inline std::uint32_t hash_op_cost(HashAlg alg) {
    switch (alg) {
        case HashAlg::Sha1: return 1110;
        case HashAlg::Md5: return 744;
        case HashAlg::Sha256: return 1110;
    }
    throw InvalidParams("unknown hash algorithm id");
}

/// One-shot digest via OpenSSL EVP.
inline std::vector<std::uint8_t> digest(HashAlg alg,
                                        const std::vector<std::uint8_t>& data) {
    const EVP_MD* md = nullptr;
    switch (alg) {
        case HashAlg::Sha1: md = EVP_sha1(); break;
        case HashAlg::Md5: md = EVP_md5(); break;
        case HashAlg::Sha256: md = EVP_sha256(); break;
    }
    if (!md) throw Error("digest algorithm unavailable");
    std::vector<std::uint8_t> out(EVP_MAX_MD_SIZE);
    unsigned out_len = 0;
    if (EVP_Digest(data.data(), data.size(), out.data(), &out_len, md, nullptr) != 1)
        throw Error("EVP_Digest failed");
    out.resize(out_len);
    return out;
}

/// Minimal big-endian encoding; 0 encodes as the single byte 0x00.
inline std::vector<std::uint8_t> int_to_bytes(const BigInt& a) {
    if (a < 0) throw InvalidParams("int_to_bytes: negative input");
    if (a == 0) return {0x00};
    std::vector<std::uint8_t> out;
    boost::multiprecision::export_bits(a, std::back_inserter(out), 8);
    return out;
}

inline BigInt bytes_to_int(const std::vector<std::uint8_t>& bytes) {
    if (bytes.empty()) return 0;
    BigInt a;
    boost::multiprecision::import_bits(a, bytes.begin(), bytes.end(), 8);
    return a;
}

/// Position t in a chain seeded with a0; immutable value type.
struct ChainState {
    BigInt a;        // current chain value a_t, never reduced mod p
    std::uint64_t t = 0;
    HashAlg alg = HashAlg::Sha256;
};

/// a_{t+1} = H(a_t), with H applied to the minimal big-endian encoding and
/// the digest read back as a big-endian integer.
inline ChainState chain_next(const ChainState& s, OpCount* tally = nullptr) {
    if (tally) ++tally->hash;
    return ChainState{bytes_to_int(digest(s.alg, int_to_bytes(s.a))), s.t + 1,
                      s.alg};
}

/// Block scalar: v0 = a_t mod p when nonzero, else 1, so v0 is always
/// invertible mod a prime p. The fold of the chain value into Z_p is
/// tallied as one addition-class modular operation per block.
inline Residue derive_v0(const BigInt& a_t, Residue p, OpCount* tally = nullptr) {
    if (!is_prime(p)) throw NotPrime(std::to_string(p) + " is not prime");
    if (tally) ++tally->add;
    const Residue r = detail::reduce_bigint(a_t, p);
    return r == 0 ? 1 : r;
}

} // namespace thc
