#include <gtest/gtest.h>

#include <random>
#include <set>
#include <string>

#include "test_util.hpp"
#include "thc/hashchain.hpp"

using namespace thc;

namespace {

std::string to_hex(const std::vector<std::uint8_t>& bytes) {
    static const char* digits = "0123456789abcdef";
    std::string out;
    for (auto b : bytes) {
        out.push_back(digits[b >> 4]);
        out.push_back(digits[b & 0xF]);
    }
    return out;
}

BigInt big_from_hex(const std::string& hex) {
    return BigInt("0x" + hex);
}

} // namespace

TEST(Digest, KnownAnswerVectors) {
    const std::vector<std::uint8_t> abc = {'a', 'b', 'c'};
    EXPECT_EQ(to_hex(digest(HashAlg::Sha1, abc)),
              "a9993e364706816aba3e25717850c26c9cd0d89d");
    EXPECT_EQ(to_hex(digest(HashAlg::Md5, abc)),
              "900150983cd24fb0d6963f7d28e17f72");
    EXPECT_EQ(to_hex(digest(HashAlg::Sha256, abc)),
              "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST(IntToBytes, Examples) {
    EXPECT_EQ(int_to_bytes(0), (std::vector<std::uint8_t>{0x00}));
    EXPECT_EQ(int_to_bytes(1), (std::vector<std::uint8_t>{0x01}));
    EXPECT_EQ(int_to_bytes(258), (std::vector<std::uint8_t>{0x01, 0x02}));
    EXPECT_EQ(int_to_bytes(255), (std::vector<std::uint8_t>{0xFF}));
    EXPECT_EQ(int_to_bytes(256), (std::vector<std::uint8_t>{0x01, 0x00}));
}

TEST(IntToBytes, RoundTripsThroughBigEndianDecode) {
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 10000; ++trial) {
        const unsigned bits = 1 + static_cast<unsigned>(uniform_below(rng, 512));
        BigInt a = 0;
        for (unsigned i = 0; i < (bits + 63) / 64; ++i) {
            a <<= 64;
            a += rng();
        }
        a >>= (64 - bits % 64) % 64;
        const auto bytes = int_to_bytes(a);
        EXPECT_EQ(bytes_to_int(bytes), a);
        if (a > 0) EXPECT_NE(bytes.front(), 0x00) << "leading zero byte";
    }
}

TEST(ChainNext, MatchesStandardDigestOfOneByte) {
    // SHA-256(0x01) and SHA-256(0x00), from an independent implementation.
    const ChainState s1 = chain_next(ChainState{1, 0, HashAlg::Sha256});
    EXPECT_EQ(s1.t, 1u);
    EXPECT_EQ(s1.a,
              big_from_hex("4bf5122f344554c53bde2ebb8cd2b7e3d1600ad631c385a5"
                           "d7cce23c7785459a"));

    const ChainState s0 = chain_next(ChainState{0, 0, HashAlg::Sha256});
    EXPECT_EQ(s0.a,
              big_from_hex("6e340b9cffb37a989ca544e6bb780a2c78901d3fb3373876"
                           "8511a30617afa01d"));
}

TEST(ChainNext, SecondStepHashesTheMinimalBigEndianEncoding) {
    ChainState s{1, 0, HashAlg::Sha256};
    s = chain_next(chain_next(s));
    EXPECT_EQ(s.t, 2u);
    EXPECT_EQ(s.a,
              big_from_hex("9c12cfdc04c74584d787ac3d23772132c18524bc7ab28dec"
                           "4219b8fc5b425f70"));
}

TEST(ChainNext, Sha1AndMd5Chains) {
    const ChainState s = chain_next(ChainState{5, 0, HashAlg::Sha1});
    EXPECT_EQ(s.a,
              big_from_hex("8dc00598417d4eb788a77ac6ccef3cb484905d8b"));
    const ChainState m = chain_next(ChainState{7, 0, HashAlg::Md5});
    EXPECT_EQ(m.a, big_from_hex("89e74e640b8c46257a29de0616794d5d"));
}

TEST(ChainNext, SteppingIsDeterministicAndComposes) {
    ChainState a{42, 0, HashAlg::Sha256};
    ChainState b = a;
    for (int i = 0; i < 5; ++i) a = chain_next(a);
    for (int i = 0; i < 5; ++i) b = chain_next(b);
    EXPECT_EQ(a.a, b.a);
    EXPECT_EQ(a.t, 5u);
}

TEST(ChainNext, TallyCountsHashInvocations) {
    OpCount tally;
    ChainState s{1, 0, HashAlg::Sha256};
    s = chain_next(s, &tally);
    s = chain_next(s, &tally);
    EXPECT_EQ(tally.hash, 2u);
    EXPECT_EQ(tally.mul, 0u);
}

TEST(ChainNext, NoCollisionAcrossTenThousandSeeds) {
    std::mt19937_64 rng(22);
    std::set<BigInt> seeds;
    while (seeds.size() < 10000)
        seeds.insert(BigInt(uniform_range(rng, 1, 1u << 30)));
    std::set<BigInt> seen;
    for (const BigInt& a0 : seeds)
        seen.insert(chain_next(ChainState{a0, 0, HashAlg::Sha256}).a);
    EXPECT_EQ(seen.size(), seeds.size());
}

TEST(DeriveV0, Examples) {
    EXPECT_EQ(derive_v0(514, 257), 1u);  // 514 = 2*257, fallback fires
    EXPECT_EQ(derive_v0(100, 257), 100u);
    EXPECT_EQ(derive_v0(1000, 257), 229u);
    EXPECT_EQ(derive_v0(0, 257), 1u);
}

TEST(DeriveV0, AlwaysInvertible) {
    std::mt19937_64 rng(23);
    for (Residue p : {2u, 13u, 257u, 65537u}) {
        for (int trial = 0; trial < 1000; ++trial) {
            BigInt a = rng();
            a = a * rng() + rng();
            const Residue v0 = derive_v0(a, p);
            EXPECT_GE(v0, 1u);
            EXPECT_LT(v0, p);
        }
    }
}

TEST(DeriveV0, TallyCountsOneFold) {
    OpCount tally;
    derive_v0(12345, 257, &tally);
    EXPECT_EQ(tally.add, 1u);
    EXPECT_EQ(tally.mul, 0u);
}

TEST(DeriveV0, RejectsCompositeModulus) {
    EXPECT_THROW(derive_v0(5, 26), NotPrime);
}

TEST(HashAlgNames, RoundTrip) {
    for (HashAlg alg : {HashAlg::Sha1, HashAlg::Md5, HashAlg::Sha256})
        EXPECT_EQ(hash_alg_from_name(hash_alg_name(alg)), alg);
    EXPECT_THROW(hash_alg_from_name("sha512"), InvalidParams);
}

TEST(HashAlgCosts, PerInvocationCounts) {
    EXPECT_EQ(hash_op_cost(HashAlg::Sha1), 1110u);
    EXPECT_EQ(hash_op_cost(HashAlg::Md5), 744u);
    EXPECT_EQ(hash_op_cost(HashAlg::Sha256), 1110u);
}
