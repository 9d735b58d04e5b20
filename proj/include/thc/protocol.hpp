#pragma once

/// One-pass key transport and the envelope wire format.
///
/// Alice picks a0 and an anchor position inside K addressed by b, sends
/// r = a0 * k_ij (mod p); Bob, who holds K, recovers a0 = r * k_ij^{-1}.
/// The envelope binds (hash alg, p, n, b, r) to the ciphertext blocks.
///
/// Envelope layout, all integers big-endian:
///   magic "THC1" | version 0x01 | hash_alg u8 | n u16 | p u32 | b u32
///   | r (w bytes) | plain_len u64 | block_count u32
///   | block_count * n field elements of w bytes each
/// where w = ceil(zeta/8) and zeta = floor(log2 p) + 1. Field elements are
/// range-checked (< p) on decode; trailing bytes are rejected.

#include <bit>
#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "thc/corecipher.hpp"
#include "thc/error.hpp"
#include "thc/hashchain.hpp"
#include "thc/modmath.hpp"
#include "thc/random.hpp"

namespace thc {

inline constexpr char kEnvelopeMagic[4] = {'T', 'H', 'C', '1'};
inline constexpr std::uint8_t kEnvelopeVersion = 0x01;

/// Byte width of one field element on the wire.
inline std::size_t field_width(Residue p) { return (zeta(p) + 7) / 8; }

/// Initiator's secrets and the public residue r sent on the wire.
struct Initiation {
    Residue a0;      // 0 < a0 < p-1, never transmitted
    std::uint32_t b; // anchor index, 1 < b < n^2
    Residue r;       // a0 * k_ij (mod p)
};

struct Envelope {
    HashAlg alg = HashAlg::Sha256;
    std::uint16_t n = 0;
    Residue p = 0;
    std::uint32_t b = 0;
    Residue r = 0;
    MessageCiphertext ciphertext;

    bool operator==(const Envelope&) const = default;
};

/// Splits the anchor index into the 1-based matrix position:
/// i = ceil(b/n), j = b - n(i-1).
inline std::pair<std::size_t, std::size_t> index_of_b(std::uint64_t b,
                                                      std::size_t n) {
    if (b <= 1 || b >= n * n)
        throw BOutOfRange("b must satisfy 1 < b < n^2, got " + std::to_string(b));
    const std::size_t i = (b + n - 1) / n;
    const std::size_t j = b - n * (i - 1);
    return {i, j};
}

/// Draws a0 uniformly from [1, p-2] and resamples b in (1, n^2) until the
/// anchored key entry is nonzero (hence invertible mod the prime p).
inline Initiation initiate(const CipherParams& params, std::mt19937_64& rng) {
    const Residue p = params.p();
    const std::size_t n = params.n();
    if (p < 3) throw InvalidParams("no valid a0 exists for p < 3");
    bool any_anchor = false;
    for (std::uint64_t b = 2; b < n * n && !any_anchor; ++b) {
        const auto [i, j] = index_of_b(b, n);
        any_anchor = params.key().at(i, j) != 0;
    }
    if (!any_anchor)
        throw NoInvertibleAnchor("every addressable key entry is zero");

    const Residue a0 = static_cast<Residue>(uniform_range(rng, 1, p - 2));
    for (;;) {
        const auto b = static_cast<std::uint32_t>(uniform_range(rng, 2, n * n - 1));
        const auto [i, j] = index_of_b(b, n);
        const Residue k_ij = params.key().at(i, j);
        if (k_ij == 0) continue;
        return Initiation{a0, b, mul_mod(a0, k_ij, p)};
    }
}

/// Responder's recovery: a0 = r * k_ij^{-1} (mod p).
inline Residue respond(const CipherParams& params, std::uint32_t b, Residue r) {
    const auto [i, j] = index_of_b(b, params.n());
    const Residue k_ij = params.key().at(i, j);
    if (k_ij == 0)
        throw NotInvertible("anchored key entry is zero (protocol violation)");
    return mul_mod(r, mod_inv(k_ij, params.p()), params.p());
}

// ---------------------------------------------------------------------------
// Envelope serialization
// ---------------------------------------------------------------------------

namespace detail {

inline void put_be(std::vector<std::uint8_t>& out, std::uint64_t v,
                   std::size_t width) {
    for (std::size_t i = 0; i < width; ++i)
        out.push_back(static_cast<std::uint8_t>(v >> (8 * (width - 1 - i))));
}

class ByteReader {
public:
    explicit ByteReader(std::span<const std::uint8_t> data) : data_(data) {}

    std::uint64_t take_be(std::size_t width) {
        if (pos_ + width > data_.size())
            throw MalformedEnvelope("truncated envelope");
        std::uint64_t v = 0;
        for (std::size_t i = 0; i < width; ++i) v = v << 8 | data_[pos_++];
        return v;
    }

    bool exhausted() const { return pos_ == data_.size(); }

private:
    std::span<const std::uint8_t> data_;
    std::size_t pos_ = 0;
};

} // namespace detail

inline std::vector<std::uint8_t> encode_envelope(const Envelope& env) {
    const std::size_t w = field_width(env.p);
    const std::uint64_t n = env.n;
    const std::uint64_t count = env.ciphertext.blocks.size();
    if (count != block_count_for(env.ciphertext.plain_len, n))
        throw LengthMismatch("block count does not match plaintext length");
    if (count > std::uint64_t{0xFFFFFFFF})
        throw LengthMismatch("message too large for a 32-bit block count");

    std::vector<std::uint8_t> out;
    out.reserve(28 + w + count * n * w);
    out.insert(out.end(), std::begin(kEnvelopeMagic), std::end(kEnvelopeMagic));
    out.push_back(kEnvelopeVersion);
    out.push_back(static_cast<std::uint8_t>(env.alg));
    detail::put_be(out, env.n, 2);
    detail::put_be(out, env.p, 4);
    detail::put_be(out, env.b, 4);
    detail::put_be(out, env.r, w);
    detail::put_be(out, env.ciphertext.plain_len, 8);
    detail::put_be(out, count, 4);
    for (const auto& block : env.ciphertext.blocks) {
        if (block.size() != n || block.modulus() != env.p)
            throw DimensionMismatch("inconsistent ciphertext block");
        for (std::size_t i = 1; i <= n; ++i) detail::put_be(out, block.at(i), w);
    }
    return out;
}

inline Envelope decode_envelope(std::span<const std::uint8_t> bytes) {
    detail::ByteReader in(bytes);
    for (char c : kEnvelopeMagic)
        if (in.take_be(1) != static_cast<std::uint8_t>(c))
            throw MalformedEnvelope("bad magic");
    if (in.take_be(1) != kEnvelopeVersion)
        throw MalformedEnvelope("unsupported version");
    const auto alg_id = in.take_be(1);
    if (alg_id < 0x01 || alg_id > 0x03)
        throw MalformedEnvelope("unknown hash algorithm id");

    Envelope env;
    env.alg = static_cast<HashAlg>(alg_id);
    env.n = static_cast<std::uint16_t>(in.take_be(2));
    if (env.n < 2) throw MalformedEnvelope("dimension must be >= 2");
    const std::uint64_t p64 = in.take_be(4);
    if (p64 < 2 || p64 >= kModulusCap)
        throw MalformedEnvelope("modulus out of range");
    env.p = static_cast<Residue>(p64);
    env.b = static_cast<std::uint32_t>(in.take_be(4));

    const std::size_t w = field_width(env.p);
    const std::uint64_t r = in.take_be(w);
    if (r >= env.p) throw MalformedEnvelope("field element r >= p");
    env.r = static_cast<Residue>(r);

    env.ciphertext.plain_len = in.take_be(8);
    const std::uint64_t count = in.take_be(4);
    if (count != block_count_for(env.ciphertext.plain_len, env.n))
        throw MalformedEnvelope("block count does not match plaintext length");

    env.ciphertext.blocks.reserve(count);
    for (std::uint64_t t = 0; t < count; ++t) {
        RowVector block(env.n, env.p);
        for (std::size_t i = 1; i <= env.n; ++i) {
            const std::uint64_t e = in.take_be(w);
            if (e >= env.p) throw MalformedEnvelope("field element >= p");
            block.set(i, e);
        }
        env.ciphertext.blocks.push_back(std::move(block));
    }
    if (!in.exhausted()) throw MalformedEnvelope("trailing bytes after envelope");
    return env;
}

// ---------------------------------------------------------------------------
// seal / open: initiate -> encrypt -> serialize, and the reverse
// ---------------------------------------------------------------------------

inline Envelope seal(const CipherParams& params,
                     std::span<const std::uint8_t> message, std::mt19937_64& rng,
                     HashAlg alg = HashAlg::Sha256) {
    if (params.n() > 0xFFFF)
        throw InvalidParams("dimension too large for the wire format");
    const Initiation init = initiate(params, rng);
    Envelope env;
    env.alg = alg;
    env.n = static_cast<std::uint16_t>(params.n());
    env.p = params.p();
    env.b = init.b;
    env.r = init.r;
    env.ciphertext = encrypt_message(message, params, init.a0, alg);
    return env;
}

inline std::vector<std::uint8_t> open(const CipherParams& params,
                                      const Envelope& env) {
    if (env.p != params.p() || env.n != params.n())
        throw ParamMismatch("envelope (p, n) do not match the key");
    const Residue a0 = respond(params, env.b, env.r);
    return decrypt_message(env.ciphertext, params, a0, env.alg);
}

} // namespace thc
