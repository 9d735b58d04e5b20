#include <gtest/gtest.h>

#include <random>

#include "test_util.hpp"
#include "thc/classic.hpp"

using namespace thc;

namespace {

HillKey worked_key() { return HillKey(Matrix::from_rows({{3, 3}, {2, 5}}, 26)); }

} // namespace

TEST(Hill, WorkedExamples) {
    const HillKey key = worked_key();
    EXPECT_EQ(hill_encrypt_block(RowVector({7, 4}, 26), key),
              RowVector({3, 15}, 26));
    EXPECT_EQ(hill_encrypt_block(RowVector({11, 15}, 26), key),
              RowVector({11, 4}, 26));
    EXPECT_EQ(hill_decrypt_block(RowVector({3, 15}, 26), key),
              RowVector({7, 4}, 26));
    EXPECT_EQ(hill_decrypt_block(RowVector({11, 4}, 26), key),
              RowVector({11, 15}, 26));
}

TEST(Hill, IdentityKey) {
    const HillKey key(Matrix::identity(3, 26));
    const RowVector x({1, 2, 3}, 26);
    EXPECT_EQ(hill_encrypt_block(x, key), x);
    EXPECT_EQ(hill_decrypt_block(x, key), x);
}

TEST(Hill, RejectsSingularKey) {
    EXPECT_THROW(HillKey(Matrix::from_rows({{2, 4}, {6, 8}}, 26)), NotInvertible);
}

TEST(Hill, RoundTripRandomized) {
    std::mt19937_64 rng(51);
    for (int trial = 0; trial < 1000; ++trial) {
        const Residue m = trial % 2 == 0 ? 26u : 97u;
        const std::size_t n = 2 + uniform_below(rng, 5); // 2..6
        const HillKey key(testutil::random_invertible_matrix(rng, n, m));
        const RowVector x = testutil::random_vector(rng, n, m);
        EXPECT_EQ(hill_decrypt_block(hill_encrypt_block(x, key), key), x);
    }
}

TEST(Hill, LinearityIsWhatTheKpaExploits) {
    std::mt19937_64 rng(52);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 2 + uniform_below(rng, 3);
        const HillKey key(testutil::random_invertible_matrix(rng, n, 26));
        const RowVector x1 = testutil::random_vector(rng, n, 26);
        const RowVector x2 = testutil::random_vector(rng, n, 26);
        RowVector sum(n, 26);
        for (std::size_t i = 1; i <= n; ++i)
            sum.set(i, add_mod(x1.at(i), x2.at(i), 26));
        const RowVector y1 = hill_encrypt_block(x1, key);
        const RowVector y2 = hill_encrypt_block(x2, key);
        RowVector y_sum(n, 26);
        for (std::size_t i = 1; i <= n; ++i)
            y_sum.set(i, add_mod(y1.at(i), y2.at(i), 26));
        EXPECT_EQ(hill_encrypt_block(sum, key), y_sum);
    }
}

TEST(AffineHill, WorkedExamples) {
    const AffineHillKey key(Matrix::from_rows({{1, 2}, {3, 4}}, 13),
                            RowVector({4, 2}, 13));
    EXPECT_EQ(affine_hill_encrypt_block(RowVector({1, 2}, 13), key),
              RowVector({11, 12}, 13));
    EXPECT_EQ(affine_hill_decrypt_block(RowVector({11, 12}, 13), key),
              RowVector({1, 2}, 13));
    // zero plaintext picks out V; ciphertext V decrypts to zero
    EXPECT_EQ(affine_hill_encrypt_block(RowVector(2, 13), key), key.v());
    EXPECT_EQ(affine_hill_decrypt_block(key.v(), key), RowVector(2, 13));
}

TEST(AffineHill, TrivialKey) {
    const AffineHillKey key(Matrix::identity(2, 13), RowVector(2, 13));
    const RowVector x({5, 7}, 13);
    EXPECT_EQ(affine_hill_encrypt_block(x, key), x);
    EXPECT_EQ(affine_hill_decrypt_block(x, key), x);
}

TEST(AffineHill, RequiresPrimeModulus) {
    EXPECT_THROW(AffineHillKey(Matrix::identity(2, 26), RowVector(2, 26)),
                 NotPrime);
}

TEST(AffineHill, RoundTripAndDifferenceProperty) {
    std::mt19937_64 rng(53);
    for (int trial = 0; trial < 500; ++trial) {
        const Residue p = trial % 2 == 0 ? 13u : 257u;
        const std::size_t n = 2 + uniform_below(rng, 4);
        const AffineHillKey key(testutil::random_invertible_matrix(rng, n, p),
                                testutil::random_vector(rng, n, p));
        const RowVector x1 = testutil::random_vector(rng, n, p);
        const RowVector x2 = testutil::random_vector(rng, n, p);
        EXPECT_EQ(affine_hill_decrypt_block(affine_hill_encrypt_block(x1, key), key),
                  x1);

        // encrypt(x1) - encrypt(x2) = (x1 - x2) K: the translation cancels
        const RowVector y1 = affine_hill_encrypt_block(x1, key);
        const RowVector y2 = affine_hill_encrypt_block(x2, key);
        RowVector y_diff(n, p), x_diff(n, p);
        for (std::size_t i = 1; i <= n; ++i) {
            y_diff.set(i, sub_mod(y1.at(i), y2.at(i), p));
            x_diff.set(i, sub_mod(x1.at(i), x2.at(i), p));
        }
        EXPECT_EQ(vec_mat_mul(x_diff, key.key()), y_diff);
    }
}

TEST(ClassicTally, MatchesTableRows) {
    std::mt19937_64 rng(54);
    const std::size_t n = 4;
    const HillKey hill(testutil::random_invertible_matrix(rng, n, 26));
    OpCount enc_tally;
    hill_encrypt_block(testutil::random_vector(rng, n, 26), hill, &enc_tally);
    EXPECT_EQ(enc_tally.mul, n * n);
    EXPECT_EQ(enc_tally.add, n * n - n);

    const AffineHillKey affine(testutil::random_invertible_matrix(rng, n, 257),
                               testutil::random_vector(rng, n, 257));
    OpCount affine_tally;
    affine_hill_encrypt_block(testutil::random_vector(rng, n, 257), affine,
                              &affine_tally);
    EXPECT_EQ(affine_tally.mul, n * n);
    EXPECT_EQ(affine_tally.add, n * n);
}
