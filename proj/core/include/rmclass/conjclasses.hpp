#pragma once

// Conjugation-closed cell decompositions of AGL(n,2).
//
// A cell is a set of mutually conjugate elements, given by a representative
// and its exact size. Cells may refine the true conjugacy classes: the
// Burnside sum only needs fixed-point counts to be constant on each cell and
// every group element to be counted exactly once.

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "rmclass/bigint.hpp"
#include "rmclass/gf2.hpp"
#include "rmclass/group.hpp"

namespace rmclass::conj {

struct ConjCell {
    group::AffineElement rep;
    BigInt size;

    friend bool operator==(const ConjCell&, const ConjCell&) = default;
};

// Polynomials over GF(2) as bit masks, bit i = coefficient of x^i.
using Poly = std::uint32_t;

int poly_degree(Poly p) noexcept;
Poly poly_mul(Poly a, Poly b) noexcept;
Poly poly_mod(Poly a, Poly m) noexcept;
// Monic irreducible polynomials of degree 1..max_degree other than x, ordered
// by (degree, bits).
std::vector<Poly> irreducible_polys(int max_degree);
gf2::BitMatrix companion_matrix(Poly p);

struct ElementaryDivisor {
    Poly poly = 0;
    std::vector<int> partition;  // descending parts

    friend bool operator==(const ElementaryDivisor&, const ElementaryDivisor&) = default;
};

struct GlClassDescriptor {
    std::vector<ElementaryDivisor> assignment;
    gf2::BitMatrix rep;
    BigInt centralizer_order;
    BigInt size;
};

BigInt centralizer_order(const std::vector<ElementaryDivisor>& assignment);

// Every conjugacy class of GL(n,2), 1 <= n <= 10, by rational canonical form.
std::vector<GlClassDescriptor> gl_classes(int n);

// Brute-force partition of GL(n,2) or AGL(n,2) into conjugacy classes for
// n <= 4. Elements are packed into a key: row i of A at bits [n*i, n*i + n),
// b at bits [n*n, n*n + n).
class ExhaustivePartition {
public:
    ExhaustivePartition(int n, bool affine);

    int n() const noexcept { return n_; }
    std::size_t class_count() const noexcept { return reps_.size(); }
    const std::vector<std::uint32_t>& class_reps() const noexcept { return reps_; }
    const std::vector<std::uint64_t>& class_sizes() const noexcept { return sizes_; }
    // Index of the class containing g, which must be invertible (and have
    // b = 0 for a linear partition).
    std::size_t class_of(const group::AffineElement& g) const;

    std::uint32_t key_of(const group::AffineElement& g) const;
    group::AffineElement element_of(std::uint32_t key) const;

private:
    int n_;
    bool affine_;
    std::vector<std::int32_t> class_index_;
    std::vector<std::uint32_t> reps_;
    std::vector<std::uint64_t> sizes_;
};

inline constexpr int kMaxExhaustiveVars = 4;

// True conjugacy classes of AGL(n,2) by closure under conjugation, n <= 4.
std::vector<ConjCell> exhaustive_cells(int n);

struct FiberGenerator {
    gf2::BitMatrix commuting;  // C with CA = AC, invertible
    gf2::BitVector offset;     // d; the map is b -> C b + (A + I) d
};

// Generators of a subgroup of the fiber action group of A: seeded samples of
// units in the commutant of A, then one translation per basis vector of
// Im(A + I). Every generator is the action of conjugation by (C, d).
std::vector<FiberGenerator> fiber_generators(const gf2::BitMatrix& a, std::uint64_t seed);

inline constexpr std::uint64_t kDefaultSeed = 0x5eed2024u;

// Cells obtained from GL classes and the orbits of the fiber action on the
// translation part. Threads: 0 means hardware concurrency.
std::vector<ConjCell> affine_cells(int n, std::uint64_t seed = kDefaultSeed, unsigned threads = 1);

BigInt total_size(const std::vector<ConjCell>& cells);
// Throws ValidationError unless the sizes are positive and sum to |AGL(n,2)|.
void validate_cells(const std::vector<ConjCell>& cells, int n);

// Line-oriented text format:
//   rmclass-cells v1 n=<n> count=<c>
//   cell <idx> size <decimal>
//   <n rows of A as 0/1 strings>
//   <b as a 0/1 string>
void write_cells(std::ostream& out, const std::vector<ConjCell>& cells, int n);
std::vector<ConjCell> read_cells(std::istream& in);
void export_cells(const std::vector<ConjCell>& cells, int n, const std::filesystem::path& path);
std::vector<ConjCell> import_cells(const std::filesystem::path& path);

enum class Provider { exhaustive, canonical, import };

std::string provider_name(Provider p);
Provider parse_provider(const std::string& name);

struct CellRequest {
    Provider provider = Provider::canonical;
    std::filesystem::path file;  // import only
    std::uint64_t seed = kDefaultSeed;
    unsigned threads = 1;
};

// Throws InvalidParameters when an imported file was made for another n.
std::vector<ConjCell> provide_cells(int n, const CellRequest& request);

}  // namespace rmclass::conj
