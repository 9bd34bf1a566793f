#include "rmclass/anf.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cctype>

#include "rmclass/errors.hpp"

namespace rmclass::anf {

using gf2::BitVector;
using gf2::Word;

namespace {

// Word positions whose index has bit j set, for j < 6.
constexpr std::array<Word, 6> kHighHalf = {
    0xAAAAAAAAAAAAAAAAull, 0xCCCCCCCCCCCCCCCCull, 0xF0F0F0F0F0F0F0F0ull,
    0xFF00FF00FF00FF00ull, 0xFFFF0000FFFF0000ull, 0xFFFFFFFF00000000ull,
};

void check_vars(int n)
{
    if (n < 1 || n > group::kMaxVars)
        throw InvalidParameters("number of variables must lie in [1, 10], got " + std::to_string(n));
}

std::size_t binomial(int n, int r)
{
    if (r < 0 || r > n)
        return 0;
    std::size_t v = 1;
    for (int i = 1; i <= r; ++i)
        v = v * static_cast<std::size_t>(n - r + i) / static_cast<std::size_t>(i);
    return v;
}

// In-place subset-sum transform over GF(2).
void moebius(std::span<Word> words, int n)
{
    for (int j = 0; j < n && j < 6; ++j) {
        const unsigned shift = 1u << j;
        for (auto& w : words)
            w ^= (w << shift) & kHighHalf[static_cast<std::size_t>(j)];
    }
    for (int j = 6; j < n; ++j) {
        const std::size_t stride = std::size_t{1} << (j - 6);
        for (std::size_t w = 0; w < words.size(); ++w)
            if (w & stride)
                words[w] ^= words[w ^ stride];
    }
}

void check_window(const Anf& f, int s, int k, bool allow_low)
{
    for (auto mask : f.masks()) {
        const int d = std::popcount(mask);
        if (d > s || (!allow_low && d <= k))
            throw DegreeOutOfRange("term of degree " + std::to_string(d) + " outside (" + std::to_string(k) +
                                   ", " + std::to_string(s) + "]");
    }
}

}  // namespace

int Monomial::degree() const noexcept
{
    return std::popcount(mask);
}

Anf::Anf(int n) : n_(n)
{
    check_vars(n);
    terms_ = BitVector(std::size_t{1} << n);
}

Anf Anf::constant(int n, bool value)
{
    Anf f(n);
    if (value)
        f.toggle(0);
    return f;
}

Anf Anf::monomial(Monomial m)
{
    Anf f(m.n);
    if (m.mask >> m.n)
        throw InvalidParameters("monomial mask uses variables beyond n");
    f.toggle(m.mask);
    return f;
}

Anf Anf::from_masks(int n, const std::vector<std::uint32_t>& masks)
{
    Anf f(n);
    for (auto m : masks) {
        if (m >> n)
            throw InvalidParameters("monomial mask uses variables beyond n");
        f.toggle(m);
    }
    return f;
}

int Anf::degree() const noexcept
{
    int best = -1;
    for (auto m : masks())
        best = std::max(best, std::popcount(m));
    return best;
}

std::vector<std::uint32_t> Anf::masks() const
{
    std::vector<std::uint32_t> out;
    auto words = terms_.words();
    for (std::size_t w = 0; w < words.size(); ++w) {
        Word bits = words[w];
        while (bits) {
            out.push_back(static_cast<std::uint32_t>(w * gf2::kWordBits + static_cast<std::size_t>(std::countr_zero(bits))));
            bits &= bits - 1;
        }
    }
    return out;
}

bool Anf::evaluate(std::uint32_t point) const noexcept
{
    bool v = false;
    for (auto m : masks())
        if ((m & point) == m)
            v = !v;
    return v;
}

Anf& Anf::operator^=(const Anf& other)
{
    if (other.n_ != n_)
        throw DimensionMismatch("Anf xor: variable counts differ");
    terms_ ^= other.terms_;
    return *this;
}

void times_affine_form_into(std::span<const Word> src, std::span<Word> dst, int n, std::uint32_t linear,
                            bool constant) noexcept
{
    if (constant)
        std::copy(src.begin(), src.end(), dst.begin());
    else
        std::fill(dst.begin(), dst.end(), Word{0});
    // x_j * P: coefficient at m (with x_j in m) is P[m] + P[m without x_j].
    for (int j = 0; j < n; ++j) {
        if (!((linear >> j) & 1u))
            continue;
        if (j < 6) {
            const Word hi = kHighHalf[static_cast<std::size_t>(j)];
            const unsigned shift = 1u << j;
            for (std::size_t w = 0; w < src.size(); ++w)
                dst[w] ^= (src[w] & hi) ^ ((src[w] << shift) & hi);
        } else {
            const std::size_t stride = std::size_t{1} << (j - 6);
            for (std::size_t w = 0; w < src.size(); ++w)
                if (w & stride)
                    dst[w] ^= src[w] ^ src[w ^ stride];
        }
    }
}

Anf times_affine_form(const Anf& p, std::uint32_t linear, bool constant)
{
    Anf out(p.n());
    times_affine_form_into(p.dense().words(), out.dense().words(), p.n(), linear, constant);
    return out;
}

void validate_space(int n, int s, int k)
{
    check_vars(n);
    if (k < -1 || k >= s || s > n)
        throw InvalidParameters("need -1 <= k < s <= n, got n=" + std::to_string(n) + " s=" + std::to_string(s) +
                                " k=" + std::to_string(k));
}

std::size_t space_dimension(int n, int s, int k)
{
    validate_space(n, s, k);
    std::size_t d = 0;
    for (int i = k + 1; i <= s; ++i)
        d += binomial(n, i);
    return d;
}

std::vector<Monomial> monomial_order(int n, int s, int k)
{
    validate_space(n, s, k);
    std::vector<Monomial> order;
    order.reserve(space_dimension(n, s, k));
    for (int degree = s; degree > k; --degree) {
        if (degree == 0) {
            order.push_back({0, n});
            continue;
        }
        // Lexicographic combinations of {0, ..., n-1} of size `degree`.
        std::vector<int> idx(static_cast<std::size_t>(degree));
        for (int i = 0; i < degree; ++i)
            idx[static_cast<std::size_t>(i)] = i;
        while (true) {
            std::uint32_t mask = 0;
            for (int v : idx)
                mask |= 1u << v;
            order.push_back({mask, n});
            int i = degree - 1;
            while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - degree + i)
                --i;
            if (i < 0)
                break;
            ++idx[static_cast<std::size_t>(i)];
            for (int t = i + 1; t < degree; ++t)
                idx[static_cast<std::size_t>(t)] = idx[static_cast<std::size_t>(t - 1)] + 1;
        }
    }
    return order;
}

const std::vector<std::uint32_t>& full_positions(int n)
{
    check_vars(n);
    static const auto table = [] {
        std::array<std::vector<std::uint32_t>, group::kMaxVars + 1> t;
        for (int m = 1; m <= group::kMaxVars; ++m) {
            t[static_cast<std::size_t>(m)].resize(std::size_t{1} << m);
            const auto order = monomial_order(m, m, -1);
            for (std::size_t p = 0; p < order.size(); ++p)
                t[static_cast<std::size_t>(m)][order[p].mask] = static_cast<std::uint32_t>(p);
        }
        return t;
    }();
    return table[static_cast<std::size_t>(n)];
}

std::size_t degree_block_start(int n, int degree)
{
    std::size_t start = 0;
    for (int i = degree + 1; i <= n; ++i)
        start += binomial(n, i);
    return start;
}

CoefficientVector cv(const Anf& f, int s, int k)
{
    const int n = f.n();
    validate_space(n, s, k);
    check_window(f, s, k, false);
    CoefficientVector v{n, s, k, BitVector(space_dimension(n, s, k))};
    const auto& pos = full_positions(n);
    const std::size_t offset = degree_block_start(n, s);
    for (auto mask : f.masks())
        v.bits.set(pos[mask] - offset);
    return v;
}

Anf decode(const CoefficientVector& v)
{
    const auto order = monomial_order(v.n, v.s, v.k);
    if (order.size() != v.bits.size())
        throw DimensionMismatch("coefficient vector length does not match its space");
    Anf f(v.n);
    for (std::size_t p = 0; p < order.size(); ++p)
        if (v.bits.get(p))
            f.toggle(order[p].mask);
    return f;
}

CoefficientVector project(const Anf& f, int s, int k)
{
    const int n = f.n();
    validate_space(n, s, k);
    check_window(f, s, k, true);
    Anf high(n);
    for (auto mask : f.masks())
        if (std::popcount(mask) > k)
            high.toggle(mask);
    return cv(high, s, k);
}

Anf substitute(const Monomial& m, const group::AffineElement& g)
{
    if (m.n != g.n())
        throw DimensionMismatch("substitute: monomial and element act on different n");
    Anf product = Anf::constant(m.n, true);
    for (int i = 0; i < m.n; ++i)
        if ((m.mask >> i) & 1u)
            product = times_affine_form(product, g.row_mask(i), (g.shift_mask() >> i) & 1u);
    return product;
}

Anf anf_from_truth_table(const BitVector& table)
{
    const std::size_t len = table.size();
    if (len < 2 || !std::has_single_bit(len))
        throw InvalidParameters("truth table length must be a power of two >= 2");
    const int n = std::countr_zero(len);
    Anf f(n);
    f.dense() = table;
    moebius(f.dense().words(), n);
    return f;
}

BitVector truth_table(const Anf& f)
{
    BitVector t = f.dense();
    moebius(t.words(), f.n());
    return t;
}

Anf parse(std::string_view text, int n)
{
    Anf f(n);
    std::string compact;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c)))
            compact.push_back(c);
    if (compact.empty())
        throw ParseError("empty polynomial");

    std::size_t start = 0;
    while (start <= compact.size()) {
        const std::size_t plus = compact.find('+', start);
        const std::string term = compact.substr(start, plus == std::string::npos ? std::string::npos : plus - start);
        if (term.empty())
            throw ParseError("empty term in '" + std::string(text) + "'");
        if (term == "1") {
            f.toggle(0);
        } else if (term != "0") {
            std::uint32_t mask = 0;
            std::size_t pos = 0;
            while (pos < term.size()) {
                if (term[pos] != 'x')
                    throw ParseError("expected variable 'x<i>' in term '" + term + "'");
                std::size_t end = pos + 1;
                while (end < term.size() && std::isdigit(static_cast<unsigned char>(term[end])))
                    ++end;
                if (end == pos + 1)
                    throw ParseError("variable without index in term '" + term + "'");
                const int index = std::stoi(term.substr(pos + 1, end - pos - 1));
                if (index < 1 || index > n)
                    throw ParseError("variable x" + std::to_string(index) + " out of range for n=" + std::to_string(n));
                mask |= 1u << (index - 1);
                pos = end;
                if (pos < term.size()) {
                    if (term[pos] != '*')
                        throw ParseError("expected '*' in term '" + term + "'");
                    ++pos;
                    if (pos == term.size())
                        throw ParseError("dangling '*' in term '" + term + "'");
                }
            }
            f.toggle(mask);
        }
        if (plus == std::string::npos)
            break;
        start = plus + 1;
    }
    return f;
}

std::string to_string(const Anf& f)
{
    std::string out;
    for (const auto& m : monomial_order(f.n(), f.n(), -1)) {
        if (!f.contains(m.mask))
            continue;
        if (!out.empty())
            out += " + ";
        if (m.mask == 0) {
            out += "1";
            continue;
        }
        bool first = true;
        for (int j = 0; j < f.n(); ++j) {
            if ((m.mask >> j) & 1u) {
                if (!first)
                    out += '*';
                out += 'x' + std::to_string(j + 1);
                first = false;
            }
        }
    }
    return out.empty() ? "0" : out;
}

}  // namespace rmclass::anf
