#pragma once

// Matrix of the action f(x) -> f(Ax + b) mod R(k,n) on coefficient vectors.
//
// Column j is the coefficient vector of the image of the j-th basis monomial.
// Because substitution composes contravariantly,
//     tau(compose(g2, g1)) == tau(g1) * tau(g2).

#include <cstddef>

#include "rmclass/gf2.hpp"
#include "rmclass/group.hpp"

namespace rmclass::repr {

struct TauMatrix {
    int n = 0;
    int s = 0;
    int k = -1;
    gf2::BitMatrix matrix;
    group::AffineElement source;
};

std::size_t dimension(int n, int s, int k);

// The full 2^n x 2^n matrix on all Boolean functions (s = n, k = -1).
gf2::BitMatrix full_representation(const group::AffineElement& g);

// Block of a full representation for the window of degrees (k, s]. Degree
// windows are contiguous in the coefficient order, and substitution never
// raises degree, so this block is exactly the quotient matrix.
gf2::BitMatrix quotient_block(const gf2::BitMatrix& full, int n, int s, int k);

TauMatrix tau_matrix(const group::AffineElement& g, int s, int k);

}  // namespace rmclass::repr
