#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "rmclass/errors.hpp"
#include "rmclass/gf2.hpp"

using namespace rmclass;
using gf2::BitMatrix;
using gf2::BitVector;

namespace {

// The 8x8 matrix exactly as printed for the worked example (row 7 included).
BitMatrix printed_example_matrix()
{
    return BitMatrix::from_strings({"10000000", "01000000", "00100000", "00110000", "00001000", "00001100",
                                    "00010010", "00001001"});
}

BitMatrix example_a()
{
    return BitMatrix::from_strings({"110", "010", "001"});
}

BitMatrix random_matrix(std::size_t rows, std::size_t cols, std::mt19937_64& rng)
{
    BitMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c)
            if (rng() & 1u)
                m.set(r, c);
    return m;
}

// Rank by brute force: size of the row span.
std::size_t span_rank(const BitMatrix& m)
{
    std::vector<BitVector> span{BitVector(m.cols())};
    for (std::size_t r = 0; r < m.rows(); ++r) {
        const auto row = m.row(r);
        if (std::find(span.begin(), span.end(), row) != span.end())
            continue;
        const std::size_t size = span.size();
        for (std::size_t i = 0; i < size; ++i)
            span.push_back(span[i] ^ row);
    }
    std::size_t rank = 0;
    while ((std::size_t{1} << rank) < span.size())
        ++rank;
    return rank;
}

}  // namespace

TEST(BitVector, StringRoundTripAndPadding)
{
    const auto v = BitVector::from_string("1011001");
    EXPECT_EQ(v.size(), 7u);
    EXPECT_EQ(v.to_string(), "1011001");
    EXPECT_EQ(v.popcount(), 4u);
    EXPECT_TRUE(v.get(0));
    EXPECT_FALSE(v.get(1));
    EXPECT_EQ(v.words()[0] >> 7, 0u);
    EXPECT_THROW(BitVector::from_string("10x"), ParseError);
}

TEST(BitVector, EmptyVector)
{
    BitVector v;
    EXPECT_TRUE(v.empty());
    EXPECT_FALSE(v.any());
    EXPECT_EQ(v.to_string(), "");
}

TEST(BitVector, XorAcrossWordBoundary)
{
    auto a = BitVector::unit(130, 0);
    a.set(129);
    const auto b = BitVector::unit(130, 129);
    const auto c = a ^ b;
    EXPECT_TRUE(c.get(0));
    EXPECT_FALSE(c.get(129));
    EXPECT_EQ(c.popcount(), 1u);
    EXPECT_THROW(a ^= BitVector(5), DimensionMismatch);
}

TEST(BitMatrix, FromStringsRejectsRaggedRows)
{
    EXPECT_THROW(BitMatrix::from_strings({"10", "1"}), ParseError);
}

TEST(Rank, ZeroMatrix)
{
    EXPECT_EQ(gf2::rank(BitMatrix(8, 8)), 0u);
    EXPECT_EQ(gf2::rank(BitMatrix(0, 0)), 0u);
}

TEST(Rank, PrintedExampleMatrix)
{
    const auto m = printed_example_matrix();
    EXPECT_EQ(gf2::rank(m), 8u);
    EXPECT_EQ(gf2::rank(m ^ BitMatrix::identity(8)), 3u);
    EXPECT_EQ(gf2::rank_plus_identity(m), 3u);
}

TEST(Rank, DoesNotMutateInput)
{
    const auto m = printed_example_matrix();
    const auto copy = m;
    (void)gf2::rank(m);
    (void)gf2::rank_plus_identity(m);
    EXPECT_EQ(m, copy);
}

TEST(Rank, MatchesSpanEnumerationAndTranspose)
{
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        const auto rows = 1 + rng() % 9;
        const auto cols = 1 + rng() % 9;
        const auto m = random_matrix(rows, cols, rng);
        const auto r = gf2::rank(m);
        EXPECT_EQ(r, span_rank(m));
        EXPECT_EQ(r, gf2::rank(m.transpose()));
    }
}

TEST(Rank, WideMatricesSpanManyWords)
{
    std::mt19937_64 rng(12);
    for (std::size_t n : {63u, 64u, 65u, 130u, 257u}) {
        const auto m = random_matrix(n, n, rng);
        EXPECT_EQ(gf2::rank(m), gf2::rank(m.transpose())) << n;
        EXPECT_EQ(gf2::rank_plus_identity(m), gf2::rank(m ^ BitMatrix::identity(n))) << n;
    }
    EXPECT_EQ(gf2::rank(BitMatrix::identity(300)), 300u);
}

TEST(MatMul, IdentityAndInverse)
{
    const auto m = printed_example_matrix();
    EXPECT_EQ(gf2::mat_mul(BitMatrix::identity(8), m), m);
    EXPECT_EQ(gf2::mat_mul(m, gf2::inverse(m)), BitMatrix::identity(8));
    EXPECT_THROW(gf2::mat_mul(m, BitMatrix(3, 3)), DimensionMismatch);
}

TEST(MatMul, SquareOfPrintedMatrixHasCancellingEntry)
{
    const auto m = printed_example_matrix();
    const auto sq = gf2::mat_mul(m, m);
    // Row 4 column 3 (1-based) receives two contributions that cancel.
    EXPECT_FALSE(sq.get(3, 2));
}

TEST(MatMul, Associative)
{
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 50; ++trial) {
        const auto a = random_matrix(5, 7, rng);
        const auto b = random_matrix(7, 70, rng);
        const auto c = random_matrix(70, 3, rng);
        EXPECT_EQ(gf2::mat_mul(gf2::mat_mul(a, b), c), gf2::mat_mul(a, gf2::mat_mul(b, c)));
    }
}

TEST(MatVec, MatchesColumnSum)
{
    const auto a = example_a();
    const auto x = BitVector::from_string("110");
    EXPECT_EQ(gf2::mat_vec(a, x).to_string(), "010");
}

TEST(Inverse, Cases)
{
    EXPECT_EQ(gf2::inverse(BitMatrix::identity(5)), BitMatrix::identity(5));
    EXPECT_EQ(gf2::inverse(example_a()), example_a());
    EXPECT_EQ(gf2::mat_mul(example_a(), example_a()), BitMatrix::identity(3));
    EXPECT_THROW(gf2::inverse(BitMatrix(4, 4)), SingularMatrix);
    EXPECT_THROW(gf2::inverse(BitMatrix(2, 3)), DimensionMismatch);
}

TEST(Inverse, SucceedsExactlyWhenFullRank)
{
    std::mt19937_64 rng(14);
    for (int trial = 0; trial < 200; ++trial) {
        const auto n = 1 + rng() % 8;
        const auto m = random_matrix(n, n, rng);
        if (gf2::rank(m) == n) {
            EXPECT_EQ(gf2::mat_mul(m, gf2::inverse(m)), BitMatrix::identity(n));
        } else {
            EXPECT_THROW(gf2::inverse(m), SingularMatrix);
        }
    }
}

TEST(Solve, ConsistentAndInconsistentSystems)
{
    const auto a = BitMatrix::from_strings({"110", "011"});
    const auto x = gf2::solve(a, BitVector::from_string("10"));
    ASSERT_TRUE(x.has_value());
    EXPECT_EQ(gf2::mat_vec(a, *x).to_string(), "10");
    const auto b = BitMatrix::from_strings({"11", "11"});
    EXPECT_FALSE(gf2::solve(b, BitVector::from_string("10")).has_value());
}

TEST(KernelBasis, DimensionAndMembership)
{
    std::mt19937_64 rng(15);
    for (int trial = 0; trial < 100; ++trial) {
        const auto m = random_matrix(1 + rng() % 6, 1 + rng() % 8, rng);
        const auto kernel = gf2::kernel_basis(m);
        EXPECT_EQ(kernel.size() + gf2::rank(m), m.cols());
        for (const auto& v : kernel)
            EXPECT_FALSE(gf2::mat_vec(m, v).any());
    }
}

TEST(ImageBasis, Cases)
{
    EXPECT_TRUE(gf2::image_basis(BitMatrix(3, 3)).empty());
    const auto id = gf2::image_basis(BitMatrix::identity(3));
    ASSERT_EQ(id.size(), 3u);
    for (std::size_t i = 0; i < 3; ++i)
        EXPECT_EQ(id[i], BitVector::unit(3, i));

    const auto basis = gf2::image_basis(example_a() ^ BitMatrix::identity(3));
    ASSERT_EQ(basis.size(), 1u);
    EXPECT_EQ(basis[0], BitVector::unit(3, 0));
}

TEST(ImageBasis, SpanDimensionEqualsRank)
{
    std::mt19937_64 rng(16);
    for (int trial = 0; trial < 100; ++trial) {
        const auto m = random_matrix(1 + rng() % 7, 1 + rng() % 7, rng);
        const auto basis = gf2::image_basis(m);
        ASSERT_EQ(basis.size(), gf2::rank(m));
        if (basis.empty())
            continue;
        EXPECT_EQ(span_rank(BitMatrix::from_rows(basis, m.rows())), basis.size());
        // Each basis vector is a column combination: m x = v is solvable.
        for (const auto& v : basis)
            EXPECT_TRUE(gf2::solve(m, v).has_value());
    }
}

namespace {

std::size_t brute_commutant_size(const BitMatrix& a)
{
    const std::size_t n = a.rows();
    std::size_t count = 0;
    for (std::uint32_t code = 0; code < (1u << (n * n)); ++code) {
        BitMatrix x(n, n);
        for (std::size_t i = 0; i < n * n; ++i)
            if ((code >> i) & 1u)
                x.set(i / n, i % n);
        if (gf2::mat_mul(x, a) == gf2::mat_mul(a, x))
            ++count;
    }
    return count;
}

}  // namespace

TEST(SolveCommutant, Dimensions)
{
    EXPECT_EQ(gf2::solve_commutant(BitMatrix::identity(2)).size(), 4u);
    // Companion matrix of x^2 + x + 1.
    const auto c1 = BitMatrix::from_strings({"01", "11"});
    EXPECT_EQ(gf2::solve_commutant(c1).size(), 2u);
    EXPECT_EQ(brute_commutant_size(c1), 4u);
    // Companion matrix of (x + 1)^2 = x^2 + 1.
    const auto c2 = BitMatrix::from_strings({"01", "10"});
    EXPECT_EQ(gf2::solve_commutant(c2).size(), 2u);
    EXPECT_EQ(brute_commutant_size(c2), 4u);
}

TEST(SolveCommutant, BasisCommutesAndMatchesEnumeration)
{
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 40; ++trial) {
        const auto n = 1 + rng() % 3;
        const auto a = random_matrix(n, n, rng);
        const auto basis = gf2::solve_commutant(a);
        for (const auto& x : basis)
            EXPECT_EQ(gf2::mat_mul(x, a), gf2::mat_mul(a, x));
        EXPECT_EQ(std::size_t{1} << basis.size(), brute_commutant_size(a));
    }
}

TEST(SolveCommutant, Deterministic)
{
    const auto a = BitMatrix::from_strings({"0110", "1010", "0011", "1001"});
    EXPECT_EQ(gf2::solve_commutant(a), gf2::solve_commutant(a));
}

TEST(BitMatrix, PrincipalBlockAndTranspose)
{
    const auto m = printed_example_matrix();
    const auto block = m.principal_block(2, 5);
    EXPECT_EQ(block.to_strings(), (std::vector<std::string>{"100", "110", "001"}));
    EXPECT_EQ(m.transpose().transpose(), m);
    EXPECT_TRUE(BitMatrix::identity(70).is_identity());
    EXPECT_TRUE(BitMatrix(3, 4).is_zero());
}
