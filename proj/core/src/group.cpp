#include "rmclass/group.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>

#include "rmclass/errors.hpp"

namespace rmclass::group {

using gf2::BitMatrix;
using gf2::BitVector;

AffineElement::AffineElement(BitMatrix linear, BitVector shift)
{
    if (!linear.square() || linear.rows() != shift.size())
        throw DimensionMismatch("affine element: A must be n x n and b of length n");
    if (linear.rows() < 1 || linear.rows() > static_cast<std::size_t>(kMaxVars))
        throw InvalidParameters("affine element: n must lie in [1, 10]");
    if (gf2::rank(linear) != linear.rows())
        throw SingularMatrix("affine element: A is singular");
    linear_ = std::move(linear);
    shift_ = std::move(shift);
}

AffineElement AffineElement::unchecked(BitMatrix linear, BitVector shift)
{
    AffineElement g;
    g.linear_ = std::move(linear);
    g.shift_ = std::move(shift);
    return g;
}

AffineElement AffineElement::identity(int n)
{
    return AffineElement(BitMatrix::identity(static_cast<std::size_t>(n)), BitVector(static_cast<std::size_t>(n)));
}

AffineElement AffineElement::translation(BitVector shift)
{
    const auto n = shift.size();
    return AffineElement(BitMatrix::identity(n), std::move(shift));
}

void write_element(std::ostream& out, const AffineElement& g)
{
    out << g.n() << '\n';
    for (const auto& row : g.linear().to_strings())
        out << row << '\n';
    out << g.shift().to_string() << '\n';
}

std::string to_text(const AffineElement& g)
{
    std::ostringstream out;
    write_element(out, g);
    return out.str();
}

AffineElement read_element(std::istream& in)
{
    int n = 0;
    if (!(in >> n) || n < 1 || n > kMaxVars)
        throw ParseError("affine element: expected n in [1, 10]");
    std::vector<std::string> rows(static_cast<std::size_t>(n));
    for (auto& row : rows) {
        if (!(in >> row) || row.size() != static_cast<std::size_t>(n))
            throw ParseError("affine element: expected a row of " + std::to_string(n) + " bits");
    }
    std::string shift;
    if (!(in >> shift) || shift.size() != static_cast<std::size_t>(n))
        throw ParseError("affine element: expected b with " + std::to_string(n) + " bits");
    return AffineElement(BitMatrix::from_strings(rows), BitVector::from_string(shift));
}

AffineElement from_text(const std::string& text)
{
    std::istringstream in(text);
    AffineElement g = read_element(in);
    std::string rest;
    if (in >> rest)
        throw ParseError("affine element: trailing input '" + rest + "'");
    return g;
}

BitVector apply(const AffineElement& g, const BitVector& x)
{
    return gf2::mat_vec(g.linear(), x) ^ g.shift();
}

AffineElement compose(const AffineElement& g2, const AffineElement& g1)
{
    if (g1.n() != g2.n())
        throw DimensionMismatch("compose: elements act on different dimensions");
    // (C,d) o (A,b) = (CA, Cb + d)
    return AffineElement::unchecked(gf2::mat_mul(g2.linear(), g1.linear()),
                                    gf2::mat_vec(g2.linear(), g1.shift()) ^ g2.shift());
}

AffineElement inverse(const AffineElement& g)
{
    BitMatrix inv = gf2::inverse(g.linear());
    BitVector shift = gf2::mat_vec(inv, g.shift());
    return AffineElement::unchecked(std::move(inv), std::move(shift));
}

AffineElement conjugate(const AffineElement& h, const AffineElement& g)
{
    if (h.n() != g.n())
        throw DimensionMismatch("conjugate: elements act on different dimensions");
    const BitMatrix& c = h.linear();
    BitMatrix cac = gf2::mat_mul(gf2::mat_mul(c, g.linear()), gf2::inverse(c));
    BitMatrix cac_plus_i = cac ^ BitMatrix::identity(c.rows());
    BitVector shift = gf2::mat_vec(cac_plus_i, h.shift()) ^ gf2::mat_vec(c, g.shift());
    return AffineElement::unchecked(std::move(cac), std::move(shift));
}

std::uint32_t point_label(const BitVector& v)
{
    const auto n = v.size();
    std::uint32_t label = 0;
    for (std::size_t k = 0; k < n; ++k)
        if (v.get(k))
            label |= 1u << (n - 1 - k);
    return label;
}

BitVector point_vector(std::uint32_t label, int n)
{
    BitVector v(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k)
        if ((label >> (n - 1 - k)) & 1u)
            v.set(static_cast<std::size_t>(k));
    return v;
}

Permutation identity_permutation(int n)
{
    Permutation p{n, std::vector<std::uint32_t>(std::size_t{1} << n)};
    for (std::uint32_t i = 0; i < p.images.size(); ++i)
        p.images[i] = i;
    return p;
}

bool is_bijection(const Permutation& p)
{
    if (p.images.size() != (std::size_t{1} << p.n))
        return false;
    std::vector<bool> seen(p.images.size(), false);
    for (auto img : p.images) {
        if (img >= p.images.size() || seen[img])
            return false;
        seen[img] = true;
    }
    return true;
}

Permutation then(const Permutation& first, const Permutation& second)
{
    if (first.n != second.n)
        throw DimensionMismatch("permutation composition: degree mismatch");
    Permutation out{first.n, std::vector<std::uint32_t>(first.images.size())};
    for (std::size_t i = 0; i < first.images.size(); ++i)
        out.images[i] = second.images[first.images[i]];
    return out;
}

std::vector<std::size_t> cycle_type(const Permutation& p)
{
    std::vector<bool> seen(p.images.size(), false);
    std::vector<std::size_t> lengths;
    for (std::size_t i = 0; i < p.images.size(); ++i) {
        if (seen[i])
            continue;
        std::size_t len = 0;
        for (std::size_t j = i; !seen[j]; j = p.images[j]) {
            seen[j] = true;
            ++len;
        }
        lengths.push_back(len);
    }
    std::sort(lengths.begin(), lengths.end());
    return lengths;
}

Permutation to_permutation(const AffineElement& g)
{
    const int n = g.n();
    Permutation p{n, std::vector<std::uint32_t>(std::size_t{1} << n)};
    for (std::uint32_t i = 0; i < p.images.size(); ++i)
        p.images[i] = point_label(apply(g, point_vector(i, n)));
    return p;
}

AffineElement from_permutation(const Permutation& p)
{
    const int n = p.n;
    if (n < 1 || n > kMaxVars || !is_bijection(p))
        throw NotAffine("from_permutation: not a bijection on 2^n points");
    BitVector shift = point_vector(p.images[0], n);
    BitMatrix linear(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) {
        // e_j carries label 2^(n-j) with j counted from 1.
        const std::uint32_t label = 1u << (n - 1 - j);
        const BitVector column = point_vector(p.images[label], n) ^ shift;
        for (int i = 0; i < n; ++i)
            if (column.get(static_cast<std::size_t>(i)))
                linear.set(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
    }
    if (gf2::rank(linear) != static_cast<std::size_t>(n))
        throw NotAffine("from_permutation: reconstructed linear part is singular");
    AffineElement g = AffineElement::unchecked(std::move(linear), std::move(shift));
    if (to_permutation(g) != p)
        throw NotAffine("from_permutation: permutation is not induced by an affine map");
    return g;
}

GroupOrders group_orders(int n)
{
    if (n < 1)
        throw InvalidParameters("group_orders: n must be at least 1");
    BigInt gl = 1;
    const BigInt full = pow2(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        gl *= full - pow2(static_cast<std::size_t>(i));
    return {gl, gl * full};
}

}  // namespace rmclass::group
