#include <gtest/gtest.h>

#include <random>

#include "rmclass/anf.hpp"
#include "rmclass/errors.hpp"
#include "rmclass/repr.hpp"
#include "support/oracles.hpp"

using namespace rmclass;
using gf2::BitMatrix;

namespace {

group::AffineElement example_g()
{
    return {BitMatrix::from_strings({"110", "010", "001"}), gf2::BitVector::from_string("100")};
}

template <class Fn>
void for_each_window(int n, Fn&& fn)
{
    for (int s = 0; s <= n; ++s)
        for (int k = -1; k < s; ++k)
            fn(s, k);
}

}  // namespace

TEST(Dimension, Cases)
{
    EXPECT_EQ(repr::dimension(3, 3, -1), 8u);
    for (int n = 1; n <= 10; ++n)
        EXPECT_EQ(repr::dimension(n, n, -1), std::size_t{1} << n);
    EXPECT_EQ(repr::dimension(7, 7, 1), 120u);
    EXPECT_EQ(repr::dimension(7, 1, 0), 7u);
    EXPECT_THROW(repr::dimension(3, 1, 1), InvalidParameters);
}

// Column j is the image of monomial j: x1 -> x1 + x2 + 1 and
// x1*x3 -> x1*x3 + x2*x3 + x3, the rest fixed.
TEST(TauMatrix, ExampleElementBySubstitution)
{
    const auto tau = repr::tau_matrix(example_g(), 3, -1);
    EXPECT_EQ(tau.matrix.to_strings(), (std::vector<std::string>{"10000000", "01000000", "00100000", "00110000",
                                                                 "00001000", "00001100", "00100010", "00001001"}));
    EXPECT_EQ(tau.n, 3);
    EXPECT_EQ(tau.source, example_g());
}

TEST(TauMatrix, ColumnsAreProjectedSubstitutions)
{
    std::mt19937_64 rng(41);
    for (int n = 1; n <= 5; ++n) {
        const auto g = oracle::random_element(n, rng);
        for_each_window(n, [&](int s, int k) {
            const auto tau = repr::tau_matrix(g, s, k);
            const auto order = anf::monomial_order(n, s, k);
            for (std::size_t j = 0; j < order.size(); ++j)
                EXPECT_EQ(tau.matrix.column(j), anf::project(anf::substitute(order[j], g), s, k).bits);
        });
    }
}

TEST(TauMatrix, IdentityElement)
{
    for (int n = 1; n <= 5; ++n)
        for_each_window(n, [&](int s, int k) {
            const auto tau = repr::tau_matrix(group::AffineElement::identity(n), s, k);
            EXPECT_TRUE(tau.matrix.is_identity());
            EXPECT_EQ(tau.matrix.rows(), repr::dimension(n, s, k));
        });
}

TEST(TauMatrix, InvalidWindow)
{
    EXPECT_THROW(repr::tau_matrix(example_g(), 4, 1), InvalidParameters);
    EXPECT_THROW(repr::tau_matrix(example_g(), 2, 2), InvalidParameters);
}

TEST(TauMatrix, ContravariantInComposition)
{
    std::mt19937_64 rng(42);
    for (int n = 1; n <= 4; ++n)
        for (int trial = 0; trial < 10; ++trial) {
            const auto g1 = oracle::random_element(n, rng);
            const auto g2 = oracle::random_element(n, rng);
            for_each_window(n, [&](int s, int k) {
                const auto lhs = repr::tau_matrix(group::compose(g2, g1), s, k).matrix;
                const auto rhs =
                    gf2::mat_mul(repr::tau_matrix(g1, s, k).matrix, repr::tau_matrix(g2, s, k).matrix);
                EXPECT_EQ(lhs, rhs);
            });
        }
}

TEST(TauMatrix, Invertible)
{
    std::mt19937_64 rng(43);
    for (int n = 1; n <= 6; ++n) {
        const auto g = oracle::random_element(n, rng);
        for_each_window(n, [&](int s, int k) {
            const auto tau = repr::tau_matrix(g, s, k);
            EXPECT_EQ(gf2::rank(tau.matrix), tau.matrix.rows());
        });
    }
}

// decode(tau * cv(f)) must equal the ANF of x -> f(Ax + b), reduced modulo
// R(k,n), computed from truth tables.
TEST(TauMatrix, ActionFidelityAgainstTruthTables)
{
    std::mt19937_64 rng(44);
    for (int n = 1; n <= 5; ++n)
        for (int trial = 0; trial < 6; ++trial) {
            const auto g = oracle::random_element(n, rng);
            for_each_window(n, [&](int s, int k) {
                const auto tau = repr::tau_matrix(g, s, k);
                const auto basis = oracle::window(n, s, k);
                std::vector<oracle::Mask> terms;
                for (auto m : basis)
                    if (rng() & 1u)
                        terms.push_back(m);
                // Terms of degree <= k are invisible in the quotient; add some.
                std::vector<oracle::Mask> with_low = terms;
                for (oracle::Mask m = 0; m < (1u << n); ++m)
                    if (oracle::popcount(m) <= k && (rng() & 1u))
                        with_low.push_back(m);

                const auto f = anf::Anf::from_masks(n, terms);
                const auto image = gf2::mat_vec(tau.matrix, anf::cv(f, s, k).bits);
                const auto expected = oracle::anf_terms(oracle::substitute(oracle::evaluate(with_low, n), g));
                EXPECT_EQ(image, anf::project(anf::Anf::from_masks(n, expected), s, k).bits);
            });
        }
}

TEST(QuotientBlock, EqualsDirectConstruction)
{
    std::mt19937_64 rng(45);
    for (int n = 1; n <= 7; ++n) {
        const auto g = oracle::random_element(n, rng);
        const auto full = repr::full_representation(g);
        EXPECT_EQ(full, repr::tau_matrix(g, n, -1).matrix);
        for_each_window(n, [&](int s, int k) {
            EXPECT_EQ(repr::quotient_block(full, n, s, k), repr::tau_matrix(g, s, k).matrix);
        });
    }
    EXPECT_THROW(repr::quotient_block(BitMatrix(4, 4), 3, 3, -1), DimensionMismatch);
}

TEST(FullRepresentation, TenVariables)
{
    std::mt19937_64 rng(46);
    const auto g = oracle::random_element(10, rng);
    const auto rho = repr::full_representation(g);
    EXPECT_EQ(rho.rows(), 1024u);
    const auto order = anf::monomial_order(10, 10, -1);
    for (std::size_t j : {0u, 1u, 300u, 1022u, 1023u})
        EXPECT_EQ(rho.column(j), anf::cv(anf::substitute(order[j], g), 10, -1).bits);
}
