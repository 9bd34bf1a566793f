#pragma once

// Boolean polynomials in algebraic normal form.
//
// A monomial is a subset of {x_1, ..., x_n} encoded as a mask with bit j-1
// set when x_j is present; the empty mask is the constant 1. An Anf is stored
// densely as a 2^n-bit set indexed by monomial mask. Truth tables use the same
// indexing for points: entry x holds f at the point whose coordinate x_j is
// bit j-1 of x.
//
// Coefficient vectors list monomials by descending degree, and within one
// degree by ascending lexicographic order of the sorted index tuples
// (x1x2 < x1x3 < x2x3).

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rmclass/gf2.hpp"
#include "rmclass/group.hpp"

namespace rmclass::anf {

struct Monomial {
    std::uint32_t mask = 0;
    int n = 0;

    int degree() const noexcept;
    friend bool operator==(const Monomial&, const Monomial&) = default;
};

class Anf {
public:
    Anf() = default;
    explicit Anf(int n);

    static Anf constant(int n, bool value);
    static Anf monomial(Monomial m);
    static Anf from_masks(int n, const std::vector<std::uint32_t>& masks);

    int n() const noexcept { return n_; }
    bool contains(std::uint32_t mask) const noexcept { return terms_.get(mask); }
    void toggle(std::uint32_t mask) noexcept { terms_.flip(mask); }

    bool is_zero() const noexcept { return !terms_.any(); }
    // Degree of the highest term; -1 for the zero polynomial.
    int degree() const noexcept;
    std::vector<std::uint32_t> masks() const;
    std::size_t term_count() const noexcept { return terms_.popcount(); }

    const gf2::BitVector& dense() const noexcept { return terms_; }
    gf2::BitVector& dense() noexcept { return terms_; }

    bool evaluate(std::uint32_t point) const noexcept;

    Anf& operator^=(const Anf& other);
    friend Anf operator^(Anf lhs, const Anf& rhs)
    {
        lhs ^= rhs;
        return lhs;
    }
    friend bool operator==(const Anf&, const Anf&) = default;

private:
    int n_ = 0;
    gf2::BitVector terms_;
};

// Product of p with the affine form  constant + sum_{j in linear} x_j.
Anf times_affine_form(const Anf& p, std::uint32_t linear, bool constant);
// Same on raw dense storage of 2^n bits; `dst` is overwritten.
void times_affine_form_into(std::span<const gf2::Word> src, std::span<gf2::Word> dst, int n, std::uint32_t linear,
                            bool constant) noexcept;

struct CoefficientVector {
    int n = 0;
    int s = 0;
    int k = -1;
    gf2::BitVector bits;

    friend bool operator==(const CoefficientVector&, const CoefficientVector&) = default;
};

// Throws InvalidParameters unless 1 <= n <= 10 and -1 <= k < s <= n.
void validate_space(int n, int s, int k);

// sum_{i=k+1}^{s} C(n, i)
std::size_t space_dimension(int n, int s, int k);

std::vector<Monomial> monomial_order(int n, int s, int k);
// Position of every mask in monomial_order(n, n, -1); entry `mask`.
const std::vector<std::uint32_t>& full_positions(int n);
// Start of the degree-`degree` block in monomial_order(n, n, -1).
std::size_t degree_block_start(int n, int degree);

// Throws DegreeOutOfRange when f has a term of degree > s or <= k.
CoefficientVector cv(const Anf& f, int s, int k);
Anf decode(const CoefficientVector& v);
// Drops all terms of degree <= k, then encodes; throws DegreeOutOfRange for
// terms of degree > s.
CoefficientVector project(const Anf& f, int s, int k);

// ANF of x -> m(Ax + b), expanded as the product of the affine forms
// (row_i(A) x + b_i) over the variables of m.
Anf substitute(const Monomial& m, const group::AffineElement& g);

// Binary Moebius transform. The transform is an involution, so the same
// routine maps ANF -> truth table.
Anf anf_from_truth_table(const gf2::BitVector& table);
gf2::BitVector truth_table(const Anf& f);

// "x1*x2*x3 + x3 + 1", "0", "1". The number of variables is supplied.
Anf parse(std::string_view text, int n);
std::string to_string(const Anf& f);

}  // namespace rmclass::anf
