#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "lefschetz/lefschetz.hpp"

using namespace lefschetz;

namespace {

ExactMatrix random_matrix(std::mt19937& rng, std::size_t r, std::size_t c, int lo, int hi) {
    std::uniform_int_distribution<int> dist(lo, hi);
    ExactMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < c; ++j) m(i, j) = dist(rng);
    }
    return m;
}

// Leibniz expansion over all permutations.
Integer permutation_determinant(const ExactMatrix& m) {
    std::vector<std::size_t> perm(m.rows());
    std::iota(perm.begin(), perm.end(), 0);
    Integer total = 0;
    do {
        int inversions = 0;
        for (std::size_t i = 0; i < perm.size(); ++i) {
            for (std::size_t j = i + 1; j < perm.size(); ++j) inversions += perm[i] > perm[j] ? 1 : 0;
        }
        Integer term = inversions % 2 == 0 ? 1 : -1;
        for (std::size_t i = 0; i < perm.size(); ++i) term *= m(i, perm[i]);
        total += term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

// Rank as the largest nonsingular minor, by brute force.
std::size_t minor_rank(const ExactMatrix& m) {
    const std::size_t top = std::min(m.rows(), m.cols());
    for (std::size_t k = top; k > 0; --k) {
        std::vector<bool> rsel(m.rows(), false);
        std::fill(rsel.begin(), rsel.begin() + static_cast<long>(k), true);
        do {
            std::vector<bool> csel(m.cols(), false);
            std::fill(csel.begin(), csel.begin() + static_cast<long>(k), true);
            do {
                std::vector<std::size_t> rows, cols;
                for (std::size_t i = 0; i < m.rows(); ++i) if (rsel[i]) rows.push_back(i);
                for (std::size_t j = 0; j < m.cols(); ++j) if (csel[j]) cols.push_back(j);
                if (permutation_determinant(m.submatrix(rows, cols)) != 0) return k;
            } while (std::prev_permutation(csel.begin(), csel.end()));
        } while (std::prev_permutation(rsel.begin(), rsel.end()));
    }
    return 0;
}

}  // namespace

TEST(ExactMatrix, RankAndDeterminantExamples) {
    EXPECT_EQ(rank(ExactMatrix{{1, 2}, {2, 4}}), 1u);
    EXPECT_EQ(determinant(ExactMatrix{{1, 1}, {1, 2}}), 1);
    EXPECT_EQ(determinant(ExactMatrix{{0, 1}, {1, 0}}), -1);
    EXPECT_EQ(determinant(ExactMatrix(0, 0)), 1);
    EXPECT_EQ(rank(ExactMatrix(3, 0)), 0u);
    EXPECT_EQ(rank(ExactMatrix(2, 3)), 0u);
    EXPECT_EQ(determinant(ExactMatrix::identity(5)), 1);
    EXPECT_THROW(determinant(ExactMatrix(2, 3)), std::invalid_argument);
}

TEST(ExactMatrix, LargeEntriesStayExact) {
    ExactMatrix m(2, 2);
    m(0, 0) = Integer("100000000000000000000000000001");
    m(0, 1) = Integer("100000000000000000000000000000");
    m(1, 0) = 1;
    m(1, 1) = 1;
    EXPECT_EQ(determinant(m), 1);
}

TEST(ExactMatrix, DeterminantMatchesPermutationExpansion) {
    std::mt19937 rng(1);
    for (int trial = 0; trial < 200; ++trial) {
        const auto n = static_cast<std::size_t>(1 + trial % 5);
        const auto m = random_matrix(rng, n, n, -3, 3);
        EXPECT_EQ(determinant(m), permutation_determinant(m));
    }
}

TEST(ExactMatrix, RankMatchesMinors) {
    std::mt19937 rng(2);
    for (int trial = 0; trial < 150; ++trial) {
        const auto r = static_cast<std::size_t>(1 + trial % 4);
        const auto c = static_cast<std::size_t>(1 + (trial / 4) % 4);
        const auto m = random_matrix(rng, r, c, -1, 1);
        EXPECT_EQ(rank(m), minor_rank(m));
        EXPECT_EQ(rank(m), rank(m.transpose()));
    }
}

TEST(ExactMatrix, RankInvariantUnderPermutationAndScaling) {
    std::mt19937 rng(3);
    for (int trial = 0; trial < 100; ++trial) {
        const auto m = random_matrix(rng, 5, 4, -2, 2);
        std::vector<std::size_t> rows{0, 1, 2, 3, 4};
        std::vector<std::size_t> cols{0, 1, 2, 3};
        std::shuffle(rows.begin(), rows.end(), rng);
        std::shuffle(cols.begin(), cols.end(), rng);
        EXPECT_EQ(rank(m.submatrix(rows, cols)), rank(m));
        auto scaled = m;
        for (std::size_t j = 0; j < scaled.cols(); ++j) scaled(2, j) *= -7;
        EXPECT_EQ(rank(scaled), rank(m));
    }
}

TEST(ExactMatrix, ApplyAndTranspose) {
    const ExactMatrix m{{1, 2, 3}, {4, 5, 6}};
    const std::vector<Integer> x{1, 0, -1};
    EXPECT_EQ(m.apply(x), (std::vector<Integer>{-2, -2}));
    EXPECT_EQ(m.transpose().transpose(), m);
    EXPECT_EQ(m.transpose()(2, 1), 6);
}

TEST(Binomial, Values) {
    EXPECT_EQ(binomial(5, 2), 10);
    EXPECT_EQ(binomial(1, 2), 0);
    EXPECT_EQ(binomial(4, -1), 0);
    EXPECT_EQ(binomial(0, 0), 1);
    EXPECT_THROW(binomial(-1, 0), std::domain_error);
    for (long n = 1; n <= 20; ++n) {
        for (long k = 0; k <= n; ++k) EXPECT_EQ(binomial(n, k), binomial(n - 1, k - 1) + binomial(n - 1, k));
    }
}

TEST(Binomial, Multinomial) {
    EXPECT_EQ(multinomial(3, {1, 1, 1}), 6);
    EXPECT_EQ(multinomial(4, {2, 2}), 6);
    EXPECT_EQ(multinomial(2, {2, 0, 0}), 1);
    EXPECT_EQ(multinomial(3, {1, 1}), 0);
    EXPECT_THROW(multinomial(-1, {0}), std::domain_error);
}
