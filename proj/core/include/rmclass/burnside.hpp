#pragma once

// Orbit counting for AGL(n,2) acting on R(s,n)/R(k,n):
//
//     N = (1/|AGL|) * sum over cells of |cell| * 2^(d - rank(tau(rep) + I))
//
// evaluated in exact integers.

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "rmclass/bigint.hpp"
#include "rmclass/conjclasses.hpp"
#include "rmclass/group.hpp"

namespace rmclass::burnside {

struct CountResult {
    int n = 0;
    int s = 0;
    int k = -1;
    BigInt count;
    std::string provider;
    std::size_t cells = 0;
    double seconds = 0.0;
};

// 2^(d - rank(tau_g + I)), the number of quotient functions fixed by g.
BigInt fix_count(const group::AffineElement& g, int s, int k);

// Burnside over a given decomposition. Throws ValidationError when the cell
// sizes do not sum to |AGL(n,2)| and InexactDivision on a nonzero remainder.
CountResult count(int n, int s, int k, const std::vector<conj::ConjCell>& cells, const std::string& provider,
                  unsigned threads = 1);

CountResult count(int n, int s, int k, const conj::CellRequest& request);

// (s, k) -> N for every -1 <= k < s <= n, building each representation once.
using CountTable = std::map<std::pair<int, int>, BigInt>;
CountTable count_table(int n, const std::vector<conj::ConjCell>& cells, unsigned threads = 1);

struct SymmetryViolation {
    int s = 0;
    int k = -1;
    BigInt count;
    BigInt mirror_count;
};

// Pairs (s, k) whose count differs from that of (n-1-k, n-1-s).
std::vector<SymmetryViolation> symmetry_violations(int n, const CountTable& table);
std::vector<SymmetryViolation> symmetry_check(int n, const conj::CellRequest& request);

}  // namespace rmclass::burnside
