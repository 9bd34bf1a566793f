#include "rmclass/conjclasses.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <fstream>
#include <iterator>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "parallel.hpp"
#include "rmclass/errors.hpp"

namespace rmclass::conj {

using gf2::BitMatrix;
using gf2::BitVector;

// ---------------------------------------------------------------------------
// Polynomials over GF(2)

int poly_degree(Poly p) noexcept
{
    return static_cast<int>(std::bit_width(p)) - 1;
}

Poly poly_mul(Poly a, Poly b) noexcept
{
    Poly out = 0;
    while (b) {
        if (b & 1u)
            out ^= a;
        a <<= 1;
        b >>= 1;
    }
    return out;
}

Poly poly_mod(Poly a, Poly m) noexcept
{
    const int dm = poly_degree(m);
    for (int da = poly_degree(a); da >= dm; da = poly_degree(a))
        a ^= m << (da - dm);
    return a;
}

std::vector<Poly> irreducible_polys(int max_degree)
{
    std::vector<Poly> out;
    for (int d = 1; d <= max_degree; ++d) {
        // Odd constant term rules out x as a factor and x itself.
        for (Poly p = (1u << d) | 1u; p < (2u << d); p += 2) {
            bool irreducible = true;
            for (Poly q : out) {
                if (2 * poly_degree(q) > d)
                    break;
                if (poly_mod(p, q) == 0) {
                    irreducible = false;
                    break;
                }
            }
            if (irreducible)
                out.push_back(p);
        }
    }
    return out;
}

BitMatrix companion_matrix(Poly p)
{
    const int m = poly_degree(p);
    if (m < 1)
        throw InvalidParameters("companion_matrix: polynomial must have positive degree");
    const auto size = static_cast<std::size_t>(m);
    BitMatrix c(size, size);
    for (std::size_t i = 0; i + 1 < size; ++i)
        c.set(i + 1, i);
    for (std::size_t i = 0; i < size; ++i)
        if ((p >> i) & 1u)
            c.set(i, size - 1);
    return c;
}

namespace {

Poly poly_pow(Poly p, int e)
{
    Poly out = 1;
    for (int i = 0; i < e; ++i)
        out = poly_mul(out, p);
    return out;
}

void partitions_of(int total, int max_part, std::vector<int>& current, std::vector<std::vector<int>>& out)
{
    if (total == 0) {
        out.push_back(current);
        return;
    }
    for (int part = std::min(total, max_part); part >= 1; --part) {
        current.push_back(part);
        partitions_of(total - part, part, current, out);
        current.pop_back();
    }
}

std::vector<std::vector<int>> partitions_of(int total)
{
    std::vector<std::vector<int>> out;
    std::vector<int> current;
    partitions_of(total, total, current, out);
    return out;
}

void enumerate_assignments(const std::vector<Poly>& polys, std::size_t index, int remaining,
                           std::vector<ElementaryDivisor>& current, std::vector<std::vector<ElementaryDivisor>>& out)
{
    if (remaining == 0) {
        out.push_back(current);
        return;
    }
    if (index == polys.size())
        return;
    const Poly p = polys[index];
    const int d = poly_degree(p);
    if (d > remaining)
        return;  // polys are sorted by degree
    enumerate_assignments(polys, index + 1, remaining, current, out);
    for (int multiplicity = 1; multiplicity * d <= remaining; ++multiplicity) {
        for (auto& partition : partitions_of(multiplicity)) {
            current.push_back({p, std::move(partition)});
            enumerate_assignments(polys, index + 1, remaining - multiplicity * d, current, out);
            current.pop_back();
        }
    }
}

BitMatrix block_diagonal(const std::vector<BitMatrix>& blocks)
{
    std::size_t n = 0;
    for (const auto& b : blocks)
        n += b.rows();
    BitMatrix out(n, n);
    std::size_t offset = 0;
    for (const auto& b : blocks) {
        for (std::size_t r = 0; r < b.rows(); ++r)
            for (std::size_t c = 0; c < b.cols(); ++c)
                if (b.get(r, c))
                    out.set(offset + r, offset + c);
        offset += b.rows();
    }
    return out;
}

}  // namespace

BigInt centralizer_order(const std::vector<ElementaryDivisor>& assignment)
{
    BigInt numerator = 1;
    std::size_t denominator_exponent = 0;
    for (const auto& [poly, partition] : assignment) {
        const std::size_t d = static_cast<std::size_t>(poly_degree(poly));
        // q^(sum of squared conjugate parts) * prod_k prod_{j<=m_k} (1 - q^-j),
        // with the q^-j denominators collected into one power of two.
        const int largest = partition.empty() ? 0 : partition.front();
        std::size_t squares = 0;
        for (int i = 1; i <= largest; ++i) {
            const auto conjugate_part = static_cast<std::size_t>(
                std::count_if(partition.begin(), partition.end(), [i](int part) { return part >= i; }));
            squares += conjugate_part * conjugate_part;
        }
        numerator *= pow2(d * squares);
        for (int part = 1; part <= largest; ++part) {
            const auto multiplicity =
                static_cast<std::size_t>(std::count(partition.begin(), partition.end(), part));
            for (std::size_t j = 1; j <= multiplicity; ++j) {
                numerator *= pow2(d * j) - 1;
                denominator_exponent += d * j;
            }
        }
    }
    const BigInt denominator = pow2(denominator_exponent);
    if (numerator % denominator != 0)
        throw InexactDivision("centralizer order is not an integer");
    return numerator / denominator;
}

std::vector<GlClassDescriptor> gl_classes(int n)
{
    if (n < 1 || n > group::kMaxVars)
        throw InvalidParameters("gl_classes: n must lie in [1, 10]");
    const BigInt gl_order = group::group_orders(n).general_linear;
    const auto polys = irreducible_polys(n);

    std::vector<std::vector<ElementaryDivisor>> assignments;
    std::vector<ElementaryDivisor> current;
    enumerate_assignments(polys, 0, n, current, assignments);

    std::vector<GlClassDescriptor> out;
    out.reserve(assignments.size());
    for (auto& assignment : assignments) {
        std::vector<BitMatrix> blocks;
        for (const auto& [poly, partition] : assignment)
            for (int part : partition)
                blocks.push_back(companion_matrix(poly_pow(poly, part)));
        GlClassDescriptor desc;
        desc.rep = block_diagonal(blocks);
        desc.centralizer_order = centralizer_order(assignment);
        if (gl_order % desc.centralizer_order != 0)
            throw InexactDivision("centralizer order does not divide |GL(n,2)|");
        desc.size = gl_order / desc.centralizer_order;
        desc.assignment = std::move(assignment);
        out.push_back(std::move(desc));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Brute-force partition for small n

namespace {

struct PackedElement {
    std::array<std::uint32_t, kMaxExhaustiveVars> rows{};
    std::uint32_t shift = 0;
};

PackedElement unpack(std::uint32_t key, int n)
{
    PackedElement e;
    const std::uint32_t row_mask = (1u << n) - 1;
    for (int i = 0; i < n; ++i)
        e.rows[static_cast<std::size_t>(i)] = (key >> (n * i)) & row_mask;
    e.shift = (key >> (n * n)) & row_mask;
    return e;
}

std::uint32_t pack(const PackedElement& e, int n)
{
    std::uint32_t key = 0;
    for (int i = 0; i < n; ++i)
        key |= e.rows[static_cast<std::size_t>(i)] << (n * i);
    return key | (e.shift << (n * n));
}

std::uint32_t packed_apply_linear(const PackedElement& e, std::uint32_t x, int n)
{
    std::uint32_t y = 0;
    for (int i = 0; i < n; ++i)
        y |= static_cast<std::uint32_t>(std::popcount(e.rows[static_cast<std::size_t>(i)] & x) & 1) << i;
    return y;
}

// (C, d) o (A, b) = (CA, Cb + d)
PackedElement packed_compose(const PackedElement& outer, const PackedElement& inner, int n)
{
    PackedElement out;
    for (int i = 0; i < n; ++i) {
        std::uint32_t row = 0;
        for (int t = 0; t < n; ++t)
            if ((outer.rows[static_cast<std::size_t>(i)] >> t) & 1u)
                row ^= inner.rows[static_cast<std::size_t>(t)];
        out.rows[static_cast<std::size_t>(i)] = row;
    }
    out.shift = packed_apply_linear(outer, inner.shift, n) ^ outer.shift;
    return out;
}

bool packed_invertible(const PackedElement& e, int n)
{
    auto rows = e.rows;
    int rank = 0;
    for (int c = 0; c < n; ++c) {
        int pivot = -1;
        for (int r = rank; r < n; ++r)
            if ((rows[static_cast<std::size_t>(r)] >> c) & 1u) {
                pivot = r;
                break;
            }
        if (pivot < 0)
            continue;
        std::swap(rows[static_cast<std::size_t>(rank)], rows[static_cast<std::size_t>(pivot)]);
        for (int r = 0; r < n; ++r)
            if (r != rank && ((rows[static_cast<std::size_t>(r)] >> c) & 1u))
                rows[static_cast<std::size_t>(r)] ^= rows[static_cast<std::size_t>(rank)];
        ++rank;
    }
    return rank == n;
}

}  // namespace

ExhaustivePartition::ExhaustivePartition(int n, bool affine) : n_(n), affine_(affine)
{
    if (n < 1 || n > kMaxExhaustiveVars)
        throw InvalidParameters("exhaustive enumeration is limited to 1 <= n <= 4");
    const int bits = n * n + (affine ? n : 0);
    class_index_.assign(std::size_t{1} << bits, -1);

    // Transvections I + E_ij and one translation generate the group; all of
    // them are involutions, so conjugating by g is g x g.
    std::vector<PackedElement> generators;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j)
                continue;
            PackedElement t;
            for (int r = 0; r < n; ++r)
                t.rows[static_cast<std::size_t>(r)] = 1u << r;
            t.rows[static_cast<std::size_t>(i)] |= 1u << j;
            generators.push_back(t);
        }
    if (affine) {
        PackedElement t;
        for (int r = 0; r < n; ++r)
            t.rows[static_cast<std::size_t>(r)] = 1u << r;
        t.shift = 1u;
        generators.push_back(t);
    }

    std::vector<std::uint32_t> queue;
    for (std::uint32_t key = 0; key < class_index_.size(); ++key) {
        if (class_index_[key] >= 0 || !packed_invertible(unpack(key, n), n))
            continue;
        const auto id = static_cast<std::int32_t>(reps_.size());
        reps_.push_back(key);
        std::uint64_t size = 0;
        queue.assign(1, key);
        class_index_[key] = id;
        while (!queue.empty()) {
            const std::uint32_t cur = queue.back();
            queue.pop_back();
            ++size;
            const PackedElement e = unpack(cur, n);
            for (const auto& g : generators) {
                const std::uint32_t next = pack(packed_compose(packed_compose(g, e, n), g, n), n);
                if (class_index_[next] < 0) {
                    class_index_[next] = id;
                    queue.push_back(next);
                }
            }
        }
        sizes_.push_back(size);
    }
}

std::uint32_t ExhaustivePartition::key_of(const group::AffineElement& g) const
{
    if (g.n() != n_)
        throw DimensionMismatch("exhaustive partition: element has the wrong dimension");
    PackedElement e;
    for (int i = 0; i < n_; ++i)
        e.rows[static_cast<std::size_t>(i)] = g.row_mask(i);
    e.shift = affine_ ? g.shift_mask() : 0;
    if (!affine_ && g.shift_mask() != 0)
        throw InvalidParameters("exhaustive partition: linear partition given an element with b != 0");
    return pack(e, n_);
}

group::AffineElement ExhaustivePartition::element_of(std::uint32_t key) const
{
    const PackedElement e = unpack(key, n_);
    const auto n = static_cast<std::size_t>(n_);
    BitMatrix a(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if ((e.rows[i] >> j) & 1u)
                a.set(i, j);
    BitVector b(n);
    if (affine_)
        for (std::size_t i = 0; i < n; ++i)
            if ((e.shift >> i) & 1u)
                b.set(i);
    return group::AffineElement(std::move(a), std::move(b));
}

std::size_t ExhaustivePartition::class_of(const group::AffineElement& g) const
{
    const std::int32_t id = class_index_[key_of(g)];
    if (id < 0)
        throw SingularMatrix("exhaustive partition: element is not invertible");
    return static_cast<std::size_t>(id);
}

std::vector<ConjCell> exhaustive_cells(int n)
{
    const ExhaustivePartition partition(n, true);
    std::vector<ConjCell> cells;
    cells.reserve(partition.class_count());
    for (std::size_t i = 0; i < partition.class_count(); ++i)
        cells.push_back({partition.element_of(partition.class_reps()[i]), BigInt(partition.class_sizes()[i])});
    return cells;
}

// ---------------------------------------------------------------------------
// Fiber refinement over GL classes

namespace {

std::vector<std::uint32_t> row_key(const BitMatrix& m)
{
    std::vector<std::uint32_t> key(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r)
        key[r] = static_cast<std::uint32_t>(m.row_words(r)[0]);
    return key;
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index)
{
    // splitmix64 finaliser
    std::uint64_t z = seed + 0x9E3779B97F4A7C15ull * (index + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

std::uint32_t mask_of(const BitVector& v)
{
    return v.empty() ? 0u : static_cast<std::uint32_t>(v.words()[0]);
}

class UnionFind {
public:
    explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0u); }

    std::uint32_t find(std::uint32_t x)
    {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }
    void unite(std::uint32_t a, std::uint32_t b)
    {
        a = find(a);
        b = find(b);
        if (a != b)
            parent_[std::max(a, b)] = std::min(a, b);
    }

private:
    std::vector<std::uint32_t> parent_;
};

std::vector<ConjCell> cells_for_class(const GlClassDescriptor& cls, int n, std::uint64_t seed)
{
    const BitMatrix& a = cls.rep;
    const std::size_t points = std::size_t{1} << n;
    const BitMatrix a_plus_i = a ^ BitMatrix::identity(a.rows());

    UnionFind orbits(points);
    std::vector<std::uint32_t> linear_image(points);
    for (const auto& gen : fiber_generators(a, seed)) {
        std::array<std::uint32_t, group::kMaxVars> columns{};
        for (int j = 0; j < n; ++j)
            columns[static_cast<std::size_t>(j)] = mask_of(gen.commuting.column(static_cast<std::size_t>(j)));
        const std::uint32_t offset = mask_of(gf2::mat_vec(a_plus_i, gen.offset));
        linear_image[0] = 0;
        for (std::size_t b = 1; b < points; ++b) {
            const int low = std::countr_zero(b);
            linear_image[b] = linear_image[b ^ (std::size_t{1} << low)] ^ columns[static_cast<std::size_t>(low)];
        }
        for (std::uint32_t b = 0; b < points; ++b)
            orbits.unite(b, linear_image[b] ^ offset);
    }

    // Roots are orbit minima, so ascending roots give ascending representatives.
    std::vector<std::uint64_t> orbit_size(points, 0);
    for (std::uint32_t b = 0; b < points; ++b)
        ++orbit_size[orbits.find(b)];

    std::vector<ConjCell> cells;
    for (std::uint32_t b = 0; b < points; ++b) {
        if (orbit_size[b] == 0)
            continue;
        BitVector shift(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i)
            if ((b >> i) & 1u)
                shift.set(static_cast<std::size_t>(i));
        cells.push_back({group::AffineElement::unchecked(a, std::move(shift)), cls.size * orbit_size[b]});
    }
    return cells;
}

}  // namespace

std::vector<FiberGenerator> fiber_generators(const BitMatrix& a, std::uint64_t seed)
{
    const std::size_t n = a.rows();
    const BitMatrix identity = BitMatrix::identity(n);
    const BitVector zero(n);
    std::vector<FiberGenerator> out;
    std::set<std::vector<std::uint32_t>> seen{row_key(identity)};

    auto consider = [&](const BitMatrix& c) {
        if (gf2::rank(c) != n || !seen.insert(row_key(c)).second)
            return false;
        if (gf2::mat_mul(c, a) != gf2::mat_mul(a, c))
            throw Error("fiber_generators: commutant element does not commute");
        out.push_back({c, zero});
        return true;
    };

    const auto basis = gf2::solve_commutant(a);
    for (const auto& b : basis) {
        consider(b);
        consider(b ^ identity);
    }

    std::mt19937_64 rng(seed);
    const std::size_t draws = 4 * n * n;
    const std::size_t max_random = 2 * n + 4;
    std::size_t kept = 0;
    for (std::size_t draw = 0; draw < draws && kept < max_random && !basis.empty(); ++draw) {
        BitMatrix c(n, n);
        std::uint64_t bits = 0;
        for (std::size_t i = 0; i < basis.size(); ++i) {
            if (i % 64 == 0)
                bits = rng();
            if ((bits >> (i % 64)) & 1u)
                c ^= basis[i];
        }
        if (consider(c))
            ++kept;
    }

    const BitMatrix a_plus_i = a ^ identity;
    for (const auto& v : gf2::image_basis(a_plus_i)) {
        auto d = gf2::solve(a_plus_i, v);
        if (!d)
            throw Error("fiber_generators: image basis vector has no preimage");
        out.push_back({identity, std::move(*d)});
    }
    return out;
}

std::vector<ConjCell> affine_cells(int n, std::uint64_t seed, unsigned threads)
{
    const auto classes = gl_classes(n);
    std::vector<std::vector<ConjCell>> per_class(classes.size());

    detail::parallel_for(classes.size(), detail::resolve_threads(threads, classes.size()),
                         [&](std::size_t i, unsigned) { per_class[i] = cells_for_class(classes[i], n, mix_seed(seed, i)); });

    std::vector<ConjCell> cells;
    for (auto& group_cells : per_class)
        std::move(group_cells.begin(), group_cells.end(), std::back_inserter(cells));
    return cells;
}

// ---------------------------------------------------------------------------
// Validation and file format

BigInt total_size(const std::vector<ConjCell>& cells)
{
    BigInt total = 0;
    for (const auto& c : cells)
        total += c.size;
    return total;
}

void validate_cells(const std::vector<ConjCell>& cells, int n)
{
    for (const auto& c : cells) {
        if (c.rep.n() != n)
            throw ValidationError("cell representative acts on the wrong dimension");
        if (c.size < 1)
            throw ValidationError("cell size must be positive");
    }
    const BigInt expected = group::group_orders(n).affine;
    const BigInt total = total_size(cells);
    if (total != expected)
        throw ValidationError("cell sizes sum to " + to_decimal(total) + ", expected |AGL(" + std::to_string(n) +
                              ",2)| = " + to_decimal(expected));
}

void write_cells(std::ostream& out, const std::vector<ConjCell>& cells, int n)
{
    out << "rmclass-cells v1 n=" << n << " count=" << cells.size() << '\n';
    for (std::size_t i = 0; i < cells.size(); ++i) {
        out << "cell " << i << " size " << to_decimal(cells[i].size) << '\n';
        for (const auto& row : cells[i].rep.linear().to_strings())
            out << row << '\n';
        out << cells[i].rep.shift().to_string() << '\n';
    }
}

namespace {

int parse_header_int(const std::string& token, const std::string& key)
{
    if (token.rfind(key + "=", 0) != 0)
        throw ParseError("cell file header: expected '" + key + "=<int>', got '" + token + "'");
    const std::string digits = token.substr(key.size() + 1);
    if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; }) ||
        digits.size() > 9)
        throw ParseError("cell file header: bad value in '" + token + "'");
    return std::stoi(digits);
}

}  // namespace

std::vector<ConjCell> read_cells(std::istream& in)
{
    const std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
    if (text.find('\r') != std::string::npos)
        throw ParseError("cell file: CR characters are not allowed (LF line endings only)");
    std::istringstream tokens(text);
    std::vector<std::string> tok{std::istream_iterator<std::string>(tokens), std::istream_iterator<std::string>()};
    if (tok.empty())
        throw ParseError("cell file is empty");
    if (tok.size() < 4 || tok[0] != "rmclass-cells" || tok[1] != "v1")
        throw ParseError("cell file: missing 'rmclass-cells v1' header");
    const int n = parse_header_int(tok[2], "n");
    const int count = parse_header_int(tok[3], "count");
    if (n < 1 || n > group::kMaxVars)
        throw ParseError("cell file: n out of range");

    const std::size_t per_cell = 4 + static_cast<std::size_t>(n) + 1;
    std::size_t pos = 4;
    std::vector<ConjCell> cells;
    cells.reserve(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) {
        if (pos + per_cell > tok.size())
            throw ParseError("cell file: truncated at cell " + std::to_string(i));
        if (tok[pos] != "cell" || tok[pos + 1] != std::to_string(i) || tok[pos + 2] != "size")
            throw ParseError("cell file: expected 'cell " + std::to_string(i) + " size <decimal>'");
        BigInt size = parse_decimal(tok[pos + 3]);
        std::vector<std::string> rows(tok.begin() + static_cast<std::ptrdiff_t>(pos + 4),
                                      tok.begin() + static_cast<std::ptrdiff_t>(pos + 4 + static_cast<std::size_t>(n)));
        const std::string& shift = tok[pos + 4 + static_cast<std::size_t>(n)];
        for (const auto& r : rows)
            if (r.size() != static_cast<std::size_t>(n))
                throw ParseError("cell file: matrix row of wrong length in cell " + std::to_string(i));
        if (shift.size() != static_cast<std::size_t>(n))
            throw ParseError("cell file: translation of wrong length in cell " + std::to_string(i));
        BitMatrix a = BitMatrix::from_strings(rows);
        BitVector b = BitVector::from_string(shift);
        try {
            cells.push_back({group::AffineElement(std::move(a), std::move(b)), std::move(size)});
        } catch (const SingularMatrix&) {
            throw ValidationError("cell file: singular matrix in cell " + std::to_string(i));
        }
        pos += per_cell;
    }
    if (pos != tok.size())
        throw ParseError("cell file: trailing garbage after " + std::to_string(count) + " cells");
    validate_cells(cells, n);
    return cells;
}

void export_cells(const std::vector<ConjCell>& cells, int n, const std::filesystem::path& path)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw Error("cannot open '" + path.string() + "' for writing");
    write_cells(out, cells, n);
    if (!out)
        throw Error("failed writing '" + path.string() + "'");
}

std::vector<ConjCell> import_cells(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error("cannot open '" + path.string() + "'");
    return read_cells(in);
}

std::string provider_name(Provider p)
{
    switch (p) {
    case Provider::exhaustive:
        return "exhaustive";
    case Provider::canonical:
        return "canonical";
    case Provider::import:
        return "import";
    }
    return "unknown";
}

Provider parse_provider(const std::string& name)
{
    if (name == "exhaustive")
        return Provider::exhaustive;
    if (name == "canonical")
        return Provider::canonical;
    if (name == "import")
        return Provider::import;
    throw InvalidParameters("unknown provider '" + name + "' (expected exhaustive, canonical or import)");
}

std::vector<ConjCell> provide_cells(int n, const CellRequest& request)
{
    switch (request.provider) {
    case Provider::exhaustive:
        return exhaustive_cells(n);
    case Provider::canonical:
        return affine_cells(n, request.seed, request.threads);
    case Provider::import: {
        if (request.file.empty())
            throw InvalidParameters("the import provider needs a cell file");
        auto cells = import_cells(request.file);
        if (cells.front().rep.n() != n)
            throw InvalidParameters("cell file was made for n=" + std::to_string(cells.front().rep.n()) +
                                    ", requested n=" + std::to_string(n));
        return cells;
    }
    }
    throw InvalidParameters("unknown provider");
}

}  // namespace rmclass::conj
