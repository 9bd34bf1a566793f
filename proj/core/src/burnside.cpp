#include "rmclass/burnside.hpp"

#include <chrono>

#include "parallel.hpp"
#include "rmclass/anf.hpp"
#include "rmclass/errors.hpp"
#include "rmclass/gf2.hpp"
#include "rmclass/repr.hpp"

namespace rmclass::burnside {

namespace {

BigInt divide_exact(const BigInt& total, const BigInt& order)
{
    BigInt quotient;
    BigInt remainder;
    boost::multiprecision::divide_qr(total, order, quotient, remainder);
    if (remainder != 0)
        throw InexactDivision("Burnside sum " + to_decimal(total) + " is not divisible by |AGL| = " +
                              to_decimal(order));
    return quotient;
}

}  // namespace

BigInt fix_count(const group::AffineElement& g, int s, int k)
{
    const auto tau = repr::tau_matrix(g, s, k);
    const std::size_t d = tau.matrix.rows();
    return pow2(static_cast<unsigned>(d - gf2::rank_plus_identity(tau.matrix)));
}

CountResult count(int n, int s, int k, const std::vector<conj::ConjCell>& cells, const std::string& provider,
                  unsigned threads)
{
    const auto start = std::chrono::steady_clock::now();
    anf::validate_space(n, s, k);
    for (const auto& cell : cells)
        if (cell.rep.n() != n)
            throw DimensionMismatch("cell representative has the wrong number of variables");
    conj::validate_cells(cells, n);

    const std::size_t d = anf::space_dimension(n, s, k);
    std::vector<std::size_t> fixed_dims(cells.size());
    detail::parallel_for(cells.size(), detail::resolve_threads(threads, cells.size()),
                         [&](std::size_t i, unsigned) {
                             const auto tau = repr::tau_matrix(cells[i].rep, s, k);
                             fixed_dims[i] = d - gf2::rank_plus_identity(tau.matrix);
                         });

    BigInt total = 0;
    for (std::size_t i = 0; i < cells.size(); ++i)
        total += cells[i].size * pow2(static_cast<unsigned>(fixed_dims[i]));

    CountResult result;
    result.n = n;
    result.s = s;
    result.k = k;
    result.count = divide_exact(total, group::group_orders(n).affine);
    result.provider = provider;
    result.cells = cells.size();
    result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return result;
}

CountResult count(int n, int s, int k, const conj::CellRequest& request)
{
    const auto start = std::chrono::steady_clock::now();
    anf::validate_space(n, s, k);
    const auto cells = conj::provide_cells(n, request);
    auto result = count(n, s, k, cells, conj::provider_name(request.provider), request.threads);
    result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return result;
}

CountTable count_table(int n, const std::vector<conj::ConjCell>& cells, unsigned threads)
{
    anf::validate_space(n, n, -1);
    for (const auto& cell : cells)
        if (cell.rep.n() != n)
            throw DimensionMismatch("cell representative has the wrong number of variables");
    conj::validate_cells(cells, n);

    std::vector<std::pair<int, int>> pairs;
    for (int s = 0; s <= n; ++s)
        for (int k = -1; k < s; ++k)
            pairs.emplace_back(s, k);

    // fixed[i][p] = fixed-space dimension of cell i on pair p.
    std::vector<std::vector<std::size_t>> fixed(cells.size(), std::vector<std::size_t>(pairs.size()));
    detail::parallel_for(cells.size(), detail::resolve_threads(threads, cells.size()),
                         [&](std::size_t i, unsigned) {
                             const auto rho = repr::full_representation(cells[i].rep);
                             for (std::size_t p = 0; p < pairs.size(); ++p) {
                                 const auto [s, k] = pairs[p];
                                 const auto tau = repr::quotient_block(rho, n, s, k);
                                 fixed[i][p] = tau.rows() - gf2::rank_plus_identity(tau);
                             }
                         });

    const BigInt order = group::group_orders(n).affine;
    CountTable table;
    for (std::size_t p = 0; p < pairs.size(); ++p) {
        BigInt total = 0;
        for (std::size_t i = 0; i < cells.size(); ++i)
            total += cells[i].size * pow2(static_cast<unsigned>(fixed[i][p]));
        table[pairs[p]] = divide_exact(total, order);
    }
    return table;
}

std::vector<SymmetryViolation> symmetry_violations(int n, const CountTable& table)
{
    std::vector<SymmetryViolation> violations;
    for (const auto& [key, value] : table) {
        const auto [s, k] = key;
        const auto mirror = table.find({n - 1 - k, n - 1 - s});
        if (mirror == table.end())
            continue;
        if (mirror->second != value)
            violations.push_back({s, k, value, mirror->second});
    }
    return violations;
}

std::vector<SymmetryViolation> symmetry_check(int n, const conj::CellRequest& request)
{
    const auto cells = conj::provide_cells(n, request);
    return symmetry_violations(n, count_table(n, cells, request.threads));
}

}  // namespace rmclass::burnside
