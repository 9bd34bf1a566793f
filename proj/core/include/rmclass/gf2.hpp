#pragma once

// Dense linear algebra over GF(2). Vectors and matrix rows are packed 64 bits
// per word, bit i of a vector living in word i/64 at position i%64.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace rmclass::gf2 {

using Word = std::uint64_t;
inline constexpr std::size_t kWordBits = 64;

constexpr std::size_t words_for(std::size_t bits) noexcept
{
    return (bits + kWordBits - 1) / kWordBits;
}

class BitVector {
public:
    BitVector() = default;
    explicit BitVector(std::size_t len) : len_(len), words_(words_for(len), 0) {}

    // Parses a string of '0'/'1' characters, position 0 first.
    static BitVector from_string(std::string_view bits);
    static BitVector unit(std::size_t len, std::size_t index);

    std::size_t size() const noexcept { return len_; }
    bool empty() const noexcept { return len_ == 0; }

    bool get(std::size_t i) const noexcept { return (words_[i / kWordBits] >> (i % kWordBits)) & 1u; }
    void set(std::size_t i, bool value = true) noexcept
    {
        const Word bit = Word{1} << (i % kWordBits);
        if (value)
            words_[i / kWordBits] |= bit;
        else
            words_[i / kWordBits] &= ~bit;
    }
    void flip(std::size_t i) noexcept { words_[i / kWordBits] ^= Word{1} << (i % kWordBits); }

    bool any() const noexcept;
    std::size_t popcount() const noexcept;

    std::span<Word> words() noexcept { return words_; }
    std::span<const Word> words() const noexcept { return words_; }

    BitVector& operator^=(const BitVector& other);
    friend BitVector operator^(BitVector lhs, const BitVector& rhs)
    {
        lhs ^= rhs;
        return lhs;
    }
    friend bool operator==(const BitVector&, const BitVector&) = default;

    std::string to_string() const;

private:
    std::size_t len_ = 0;
    std::vector<Word> words_;
};

// Row-major packed matrix. Rows share one contiguous buffer; `stride` words
// per row. Bits past `cols` in each row are always zero.
class BitMatrix {
public:
    BitMatrix() = default;
    BitMatrix(std::size_t rows, std::size_t cols);

    static BitMatrix identity(std::size_t n);
    // One string of '0'/'1' per row; all rows must have the same length.
    static BitMatrix from_strings(const std::vector<std::string>& rows);
    static BitMatrix from_rows(const std::vector<BitVector>& rows, std::size_t cols);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    std::size_t stride() const noexcept { return stride_; }
    bool square() const noexcept { return rows_ == cols_; }

    bool get(std::size_t r, std::size_t c) const noexcept
    {
        return (data_[r * stride_ + c / kWordBits] >> (c % kWordBits)) & 1u;
    }
    void set(std::size_t r, std::size_t c, bool value = true) noexcept
    {
        Word& w = data_[r * stride_ + c / kWordBits];
        const Word bit = Word{1} << (c % kWordBits);
        w = value ? (w | bit) : (w & ~bit);
    }
    void flip(std::size_t r, std::size_t c) noexcept
    {
        data_[r * stride_ + c / kWordBits] ^= Word{1} << (c % kWordBits);
    }

    std::span<Word> row_words(std::size_t r) noexcept { return {data_.data() + r * stride_, stride_}; }
    std::span<const Word> row_words(std::size_t r) const noexcept
    {
        return {data_.data() + r * stride_, stride_};
    }

    BitVector row(std::size_t r) const;
    BitVector column(std::size_t c) const;
    void set_row(std::size_t r, const BitVector& v);

    BitMatrix transpose() const;
    // Square sub-block [begin, end) x [begin, end).
    BitMatrix principal_block(std::size_t begin, std::size_t end) const;
    bool is_identity() const noexcept;
    bool is_zero() const noexcept;

    BitMatrix& operator^=(const BitMatrix& other);
    friend BitMatrix operator^(BitMatrix lhs, const BitMatrix& rhs)
    {
        lhs ^= rhs;
        return lhs;
    }
    friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

    std::vector<std::string> to_strings() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::size_t stride_ = 0;
    std::vector<Word> data_;
};

std::size_t rank(const BitMatrix& m);
// Rank of (m XOR I) for square m, without materialising the sum separately.
std::size_t rank_plus_identity(const BitMatrix& m);

BitMatrix mat_mul(const BitMatrix& a, const BitMatrix& b);
BitVector mat_vec(const BitMatrix& a, const BitVector& x);

// Throws SingularMatrix when `a` has rank below its order.
BitMatrix inverse(const BitMatrix& a);

// Reduced row-echelon form of `m`; also returns the pivot column of each
// nonzero row through `pivots` when non-null.
BitMatrix rref(const BitMatrix& m, std::vector<std::size_t>* pivots = nullptr);

// Some x with m x = rhs, or nullopt when the system is inconsistent.
std::optional<BitVector> solve(const BitMatrix& m, const BitVector& rhs);

// Basis of {x : m x = 0}, in reduced row-echelon form.
std::vector<BitVector> kernel_basis(const BitMatrix& m);
// Basis of the column space of m, in reduced row-echelon form.
std::vector<BitVector> image_basis(const BitMatrix& m);

// Basis of the commutant {X : XA = AX} of a square matrix. Each basis element
// is an n x n matrix; the basis is the kernel of X -> XA + AX over the n^2
// entries of X (entry (r, c) at index r*n + c), reduced to echelon form.
std::vector<BitMatrix> solve_commutant(const BitMatrix& a);

}  // namespace rmclass::gf2
