#include "rmclass/gf2.hpp"

#include <algorithm>
#include <bit>

#include "rmclass/errors.hpp"

namespace rmclass::gf2 {

namespace {

void xor_words(std::span<Word> dst, std::span<const Word> src, std::size_t from = 0) noexcept
{
    for (std::size_t w = from; w < dst.size(); ++w)
        dst[w] ^= src[w];
}

// Forward elimination in place. Returns the rank; rows [0, rank) end up in
// row-echelon form with strictly increasing pivot columns.
std::size_t eliminate(std::vector<Word>& data, std::size_t rows, std::size_t cols, std::size_t stride,
                      bool reduce, std::vector<std::size_t>* pivots)
{
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        const std::size_t w = c / kWordBits;
        const Word bit = Word{1} << (c % kWordBits);
        std::size_t p = r;
        while (p < rows && !(data[p * stride + w] & bit))
            ++p;
        if (p == rows)
            continue;
        Word* pivot = data.data() + r * stride;
        if (p != r)
            std::swap_ranges(pivot, pivot + stride, data.data() + p * stride);
        const std::size_t start = reduce ? 0 : r + 1;
        for (std::size_t i = start; i < rows; ++i) {
            if (i == r)
                continue;
            Word* row = data.data() + i * stride;
            if (row[w] & bit)
                for (std::size_t k = w; k < stride; ++k)
                    row[k] ^= pivot[k];
        }
        if (pivots)
            pivots->push_back(c);
        ++r;
    }
    return r;
}

}  // namespace

BitVector BitVector::from_string(std::string_view bits)
{
    BitVector v(bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits[i] == '1')
            v.set(i);
        else if (bits[i] != '0')
            throw ParseError("bit string may only contain '0' and '1': " + std::string(bits));
    }
    return v;
}

BitVector BitVector::unit(std::size_t len, std::size_t index)
{
    BitVector v(len);
    v.set(index);
    return v;
}

bool BitVector::any() const noexcept
{
    return std::any_of(words_.begin(), words_.end(), [](Word w) { return w != 0; });
}

std::size_t BitVector::popcount() const noexcept
{
    std::size_t n = 0;
    for (Word w : words_)
        n += static_cast<std::size_t>(std::popcount(w));
    return n;
}

BitVector& BitVector::operator^=(const BitVector& other)
{
    if (other.len_ != len_)
        throw DimensionMismatch("BitVector xor: length mismatch");
    xor_words(words_, other.words_);
    return *this;
}

std::string BitVector::to_string() const
{
    std::string s(len_, '0');
    for (std::size_t i = 0; i < len_; ++i)
        if (get(i))
            s[i] = '1';
    return s;
}

BitMatrix::BitMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), stride_(words_for(cols)), data_(rows * stride_, 0)
{
}

BitMatrix BitMatrix::identity(std::size_t n)
{
    BitMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m.set(i, i);
    return m;
}

BitMatrix BitMatrix::from_strings(const std::vector<std::string>& rows)
{
    const std::size_t cols = rows.empty() ? 0 : rows.front().size();
    BitMatrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols)
            throw ParseError("matrix rows have different lengths");
        m.set_row(r, BitVector::from_string(rows[r]));
    }
    return m;
}

BitMatrix BitMatrix::from_rows(const std::vector<BitVector>& rows, std::size_t cols)
{
    BitMatrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r)
        m.set_row(r, rows[r]);
    return m;
}

BitVector BitMatrix::row(std::size_t r) const
{
    BitVector v(cols_);
    std::copy_n(data_.begin() + static_cast<std::ptrdiff_t>(r * stride_), stride_, v.words().begin());
    return v;
}

BitVector BitMatrix::column(std::size_t c) const
{
    BitVector v(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        if (get(r, c))
            v.set(r);
    return v;
}

void BitMatrix::set_row(std::size_t r, const BitVector& v)
{
    if (v.size() != cols_)
        throw DimensionMismatch("set_row: length mismatch");
    std::copy(v.words().begin(), v.words().end(), data_.begin() + static_cast<std::ptrdiff_t>(r * stride_));
}

BitMatrix BitMatrix::transpose() const
{
    BitMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        auto src = row_words(r);
        for (std::size_t w = 0; w < stride_; ++w) {
            Word bits = src[w];
            while (bits) {
                const auto c = w * kWordBits + static_cast<std::size_t>(std::countr_zero(bits));
                t.set(c, r);
                bits &= bits - 1;
            }
        }
    }
    return t;
}

BitMatrix BitMatrix::principal_block(std::size_t begin, std::size_t end) const
{
    if (begin > end || end > rows_ || end > cols_)
        throw DimensionMismatch("principal_block: range out of bounds");
    const std::size_t d = end - begin;
    BitMatrix out(d, d);
    if (begin % kWordBits == 0) {
        const std::size_t first = begin / kWordBits;
        for (std::size_t r = 0; r < d; ++r) {
            auto src = row_words(begin + r);
            auto dst = out.row_words(r);
            std::copy_n(src.begin() + static_cast<std::ptrdiff_t>(first), out.stride_, dst.begin());
            if (d % kWordBits)
                dst[out.stride_ - 1] &= (Word{1} << (d % kWordBits)) - 1;
        }
        return out;
    }
    const std::size_t shift = begin % kWordBits;
    const std::size_t first = begin / kWordBits;
    for (std::size_t r = 0; r < d; ++r) {
        auto src = row_words(begin + r);
        auto dst = out.row_words(r);
        for (std::size_t w = 0; w < out.stride_; ++w) {
            const std::size_t lo = first + w;
            Word v = lo < stride_ ? src[lo] >> shift : 0;
            if (lo + 1 < stride_)
                v |= src[lo + 1] << (kWordBits - shift);
            dst[w] = v;
        }
        if (d % kWordBits)
            dst[out.stride_ - 1] &= (Word{1} << (d % kWordBits)) - 1;
    }
    return out;
}

bool BitMatrix::is_identity() const noexcept
{
    if (!square())
        return false;
    for (std::size_t r = 0; r < rows_; ++r) {
        auto words = row_words(r);
        for (std::size_t w = 0; w < stride_; ++w) {
            const Word expected = (w == r / kWordBits) ? Word{1} << (r % kWordBits) : 0;
            if (words[w] != expected)
                return false;
        }
    }
    return true;
}

bool BitMatrix::is_zero() const noexcept
{
    return std::all_of(data_.begin(), data_.end(), [](Word w) { return w == 0; });
}

BitMatrix& BitMatrix::operator^=(const BitMatrix& other)
{
    if (other.rows_ != rows_ || other.cols_ != cols_)
        throw DimensionMismatch("BitMatrix xor: shape mismatch");
    xor_words(data_, other.data_);
    return *this;
}

std::vector<std::string> BitMatrix::to_strings() const
{
    std::vector<std::string> out;
    out.reserve(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        out.push_back(row(r).to_string());
    return out;
}

std::size_t rank(const BitMatrix& m)
{
    std::vector<Word> data(m.rows() * m.stride());
    for (std::size_t r = 0; r < m.rows(); ++r)
        std::copy_n(m.row_words(r).begin(), m.stride(), data.begin() + static_cast<std::ptrdiff_t>(r * m.stride()));
    return eliminate(data, m.rows(), m.cols(), m.stride(), false, nullptr);
}

std::size_t rank_plus_identity(const BitMatrix& m)
{
    if (!m.square())
        throw DimensionMismatch("rank_plus_identity: matrix is not square");
    BitMatrix copy = m;
    for (std::size_t i = 0; i < m.rows(); ++i)
        copy.flip(i, i);
    return rank(copy);
}

BitMatrix mat_mul(const BitMatrix& a, const BitMatrix& b)
{
    if (a.cols() != b.rows())
        throw DimensionMismatch("mat_mul: inner dimensions differ");
    BitMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        auto dst = c.row_words(i);
        auto src = a.row_words(i);
        for (std::size_t w = 0; w < src.size(); ++w) {
            Word bits = src[w];
            while (bits) {
                const auto t = w * kWordBits + static_cast<std::size_t>(std::countr_zero(bits));
                xor_words(dst, b.row_words(t));
                bits &= bits - 1;
            }
        }
    }
    return c;
}

BitVector mat_vec(const BitMatrix& a, const BitVector& x)
{
    if (a.cols() != x.size())
        throw DimensionMismatch("mat_vec: dimension mismatch");
    BitVector y(a.rows());
    auto xw = x.words();
    for (std::size_t r = 0; r < a.rows(); ++r) {
        auto rw = a.row_words(r);
        Word acc = 0;
        for (std::size_t w = 0; w < rw.size(); ++w)
            acc ^= rw[w] & xw[w];
        if (std::popcount(acc) & 1)
            y.set(r);
    }
    return y;
}

BitMatrix inverse(const BitMatrix& a)
{
    if (!a.square())
        throw DimensionMismatch("inverse: matrix is not square");
    const std::size_t n = a.rows();
    if (n == 0)
        return {};
    // Augmented [A | I], reduced to [I | A^-1].
    BitMatrix aug(n, 2 * n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c)
            if (a.get(r, c))
                aug.set(r, c);
        aug.set(r, n + r);
    }
    std::vector<std::size_t> pivots;
    BitMatrix reduced = rref(aug, &pivots);
    if (pivots.size() < n || pivots[n - 1] >= n)
        throw SingularMatrix("inverse: matrix is singular");
    BitMatrix inv(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
            if (reduced.get(r, n + c))
                inv.set(r, c);
    return inv;
}

BitMatrix rref(const BitMatrix& m, std::vector<std::size_t>* pivots)
{
    std::vector<Word> data(m.rows() * m.stride());
    for (std::size_t r = 0; r < m.rows(); ++r)
        std::copy_n(m.row_words(r).begin(), m.stride(), data.begin() + static_cast<std::ptrdiff_t>(r * m.stride()));
    if (pivots)
        pivots->clear();
    eliminate(data, m.rows(), m.cols(), m.stride(), true, pivots);
    BitMatrix out(m.rows(), m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r)
        std::copy_n(data.begin() + static_cast<std::ptrdiff_t>(r * m.stride()), m.stride(), out.row_words(r).begin());
    return out;
}

namespace {

std::vector<BitVector> echelon_rows(const std::vector<BitVector>& rows, std::size_t len)
{
    if (rows.empty())
        return {};
    std::vector<std::size_t> pivots;
    BitMatrix reduced = rref(BitMatrix::from_rows(rows, len), &pivots);
    std::vector<BitVector> out;
    out.reserve(pivots.size());
    for (std::size_t r = 0; r < pivots.size(); ++r)
        out.push_back(reduced.row(r));
    return out;
}

}  // namespace

std::vector<BitVector> kernel_basis(const BitMatrix& m)
{
    std::vector<std::size_t> pivots;
    BitMatrix reduced = rref(m, &pivots);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : pivots)
        is_pivot[p] = true;

    std::vector<BitVector> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free])
            continue;
        BitVector v(m.cols());
        v.set(free);
        for (std::size_t r = 0; r < pivots.size(); ++r)
            if (reduced.get(r, free))
                v.set(pivots[r]);
        basis.push_back(std::move(v));
    }
    return echelon_rows(basis, m.cols());
}

std::optional<BitVector> solve(const BitMatrix& m, const BitVector& rhs)
{
    if (rhs.size() != m.rows())
        throw DimensionMismatch("solve: right-hand side length differs from row count");
    BitMatrix aug(m.rows(), m.cols() + 1);
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c)
            if (m.get(r, c))
                aug.set(r, c);
        if (rhs.get(r))
            aug.set(r, m.cols());
    }
    std::vector<std::size_t> pivots;
    BitMatrix reduced = rref(aug, &pivots);
    if (!pivots.empty() && pivots.back() == m.cols())
        return std::nullopt;
    BitVector x(m.cols());
    for (std::size_t r = 0; r < pivots.size(); ++r)
        if (reduced.get(r, m.cols()))
            x.set(pivots[r]);
    return x;
}

std::vector<BitVector> image_basis(const BitMatrix& m)
{
    std::vector<BitVector> columns;
    columns.reserve(m.cols());
    const BitMatrix t = m.transpose();
    for (std::size_t c = 0; c < t.rows(); ++c)
        columns.push_back(t.row(c));
    return echelon_rows(columns, m.rows());
}

std::vector<BitMatrix> solve_commutant(const BitMatrix& a)
{
    if (!a.square())
        throw DimensionMismatch("solve_commutant: matrix is not square");
    const std::size_t n = a.rows();
    const std::size_t vars = n * n;
    // Row (r, c) of the system: sum_t X[r][t] A[t][c] + sum_t A[r][t] X[t][c].
    BitMatrix system(vars, vars);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) {
            const std::size_t eq = r * n + c;
            for (std::size_t t = 0; t < n; ++t) {
                if (a.get(t, c))
                    system.flip(eq, r * n + t);
                if (a.get(r, t))
                    system.flip(eq, t * n + c);
            }
        }
    }
    std::vector<BitMatrix> basis;
    for (const auto& v : kernel_basis(system)) {
        BitMatrix x(n, n);
        for (std::size_t i = 0; i < vars; ++i)
            if (v.get(i))
                x.set(i / n, i % n);
        basis.push_back(std::move(x));
    }
    return basis;
}

}  // namespace rmclass::gf2
