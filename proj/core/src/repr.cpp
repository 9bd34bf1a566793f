#include "rmclass/repr.hpp"

#include <bit>
#include <vector>

#include "rmclass/anf.hpp"
#include "rmclass/errors.hpp"

namespace rmclass::repr {

using gf2::BitMatrix;
using gf2::Word;

std::size_t dimension(int n, int s, int k)
{
    return anf::space_dimension(n, s, k);
}

namespace {

// Matrix of g on the degree window (k, s], built from the images of the
// monomials of degree <= s only.
BitMatrix window_representation(const group::AffineElement& g, int s, int k)
{
    const int n = g.n();
    const std::size_t points = std::size_t{1} << n;
    const std::size_t stride = gf2::words_for(points);

    // images[m] = ANF of m(Ax + b); built by peeling the highest variable off
    // each monomial, so every image costs one affine-form product.
    std::vector<Word> images(points * stride, 0);
    images[0] = 1;
    for (std::size_t mask = 1; mask < points; ++mask) {
        if (std::popcount(mask) > s)
            continue;
        const int top = std::bit_width(mask) - 1;
        const std::size_t rest = mask ^ (std::size_t{1} << top);
        std::span<const Word> src(images.data() + rest * stride, stride);
        std::span<Word> dst(images.data() + mask * stride, stride);
        anf::times_affine_form_into(src, dst, n, g.row_mask(top), (g.shift_mask() >> top) & 1u);
    }

    const auto& pos = anf::full_positions(n);
    const std::size_t begin = anf::degree_block_start(n, s);
    const std::size_t d = anf::degree_block_start(n, k) - begin;
    BitMatrix tau(d, d);
    for (std::size_t mask = 0; mask < points; ++mask) {
        const int degree = std::popcount(mask);
        if (degree > s || degree <= k)
            continue;
        const std::size_t column = pos[mask] - begin;
        const Word* image = images.data() + mask * stride;
        for (std::size_t w = 0; w < stride; ++w) {
            Word bits = image[w];
            while (bits) {
                const auto term = w * gf2::kWordBits + static_cast<std::size_t>(std::countr_zero(bits));
                bits &= bits - 1;
                if (std::popcount(term) > k)
                    tau.set(pos[term] - begin, column);
            }
        }
    }
    return tau;
}

}  // namespace

BitMatrix full_representation(const group::AffineElement& g)
{
    return window_representation(g, g.n(), -1);
}

BitMatrix quotient_block(const BitMatrix& full, int n, int s, int k)
{
    anf::validate_space(n, s, k);
    if (full.rows() != (std::size_t{1} << n) || !full.square())
        throw DimensionMismatch("quotient_block: expected a 2^n x 2^n representation");
    return full.principal_block(anf::degree_block_start(n, s), anf::degree_block_start(n, k));
}

TauMatrix tau_matrix(const group::AffineElement& g, int s, int k)
{
    const int n = g.n();
    anf::validate_space(n, s, k);
    return {n, s, k, window_representation(g, s, k), g};
}

}  // namespace rmclass::repr
