#pragma once

// The affine group AGL(n,2) acting on F_2^n by x -> Ax + b, and its faithful
// permutation action on the point labels {0, ..., 2^n - 1}.
//
// Point labels follow the most-significant-first convention: the vector
// (v_1, ..., v_n) has label sum_k v_k 2^(n-k). A BitVector stores coordinate
// v_k at bit k-1.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "rmclass/bigint.hpp"
#include "rmclass/gf2.hpp"

namespace rmclass::group {

inline constexpr int kMaxVars = 10;

class AffineElement {
public:
    AffineElement() = default;
    // Validates that `linear` is square, invertible and matches `shift`.
    AffineElement(gf2::BitMatrix linear, gf2::BitVector shift);

    static AffineElement identity(int n);
    static AffineElement translation(gf2::BitVector shift);

    int n() const noexcept { return static_cast<int>(linear_.rows()); }
    const gf2::BitMatrix& linear() const noexcept { return linear_; }
    const gf2::BitVector& shift() const noexcept { return shift_; }

    // Row i of A as a mask over the input coordinates (bit j = A[i][j]).
    std::uint32_t row_mask(int i) const noexcept
    {
        return static_cast<std::uint32_t>(linear_.row_words(static_cast<std::size_t>(i))[0]);
    }
    std::uint32_t shift_mask() const noexcept
    {
        return shift_.empty() ? 0u : static_cast<std::uint32_t>(shift_.words()[0]);
    }

    friend bool operator==(const AffineElement&, const AffineElement&) = default;

    // Skips the invertibility check; for results that are invertible by
    // construction.
    static AffineElement unchecked(gf2::BitMatrix linear, gf2::BitVector shift);

private:
    gf2::BitMatrix linear_;
    gf2::BitVector shift_;
};

// Text form: "n", then n rows of A as 0/1 strings, then b as a 0/1 string,
// whitespace separated.
std::string to_text(const AffineElement& g);
AffineElement from_text(const std::string& text);
AffineElement read_element(std::istream& in);
void write_element(std::ostream& out, const AffineElement& g);

gf2::BitVector apply(const AffineElement& g, const gf2::BitVector& x);
// The map x -> g2(g1(x)).
AffineElement compose(const AffineElement& g2, const AffineElement& g1);
AffineElement inverse(const AffineElement& g);
// h g h^-1 via the closed form (CAC^-1, (CAC^-1 + I) d + C b) for h = (C, d).
AffineElement conjugate(const AffineElement& h, const AffineElement& g);

// Point label <-> vector maps.
std::uint32_t point_label(const gf2::BitVector& v);
gf2::BitVector point_vector(std::uint32_t label, int n);

struct Permutation {
    int n = 0;
    std::vector<std::uint32_t> images;

    friend bool operator==(const Permutation&, const Permutation&) = default;
};

Permutation identity_permutation(int n);
bool is_bijection(const Permutation& p);
// The permutation i -> second(first(i)).
Permutation then(const Permutation& first, const Permutation& second);
// Sorted cycle lengths.
std::vector<std::size_t> cycle_type(const Permutation& p);

Permutation to_permutation(const AffineElement& g);
// Inverse of to_permutation; throws NotAffine when p is not the image of any
// affine map.
AffineElement from_permutation(const Permutation& p);

struct GroupOrders {
    BigInt general_linear;
    BigInt affine;
};
GroupOrders group_orders(int n);

}  // namespace rmclass::group
