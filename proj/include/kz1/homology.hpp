#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "kz1/dvf.hpp"
#include "kz1/integer.hpp"

namespace kz1 {

using IntegerMatrix = std::vector<std::vector<Integer>>;

/// Diagonal of the Smith normal form of `m` (nonzero entries only, positive,
/// each dividing the next). Pivots on the entry of smallest absolute value.
std::vector<Integer> smith_diagonal(IntegerMatrix m);

/// H_k = Z^rank + sum Z/t for t in torsion.
struct HomologyGroup {
    std::size_t rank = 0;
    std::vector<Integer> torsion;
};

struct HomologyResult {
    std::vector<HomologyGroup> groups;  ///< index k = 0..kmax
};

/// "Z^2 + Z/2", "Z", or "0".
std::string format_group(const HomologyGroup& g);

/// Homology of a free complex given by ranks n_0..n_{kmax+1} and matrices of
/// d_k : C_k -> C_{k-1} for k = 1..kmax+1 (d_k has n_{k-1} rows, n_k columns).
HomologyResult homology_from_matrices(const std::vector<std::size_t>& ranks,
                                      const std::vector<IntegerMatrix>& differentials, std::size_t kmax);

/// Builds the d^crit matrices on the critical bases of dimensions 0..kmax+1 and
/// computes H_0..H_kmax. Throws PreconditionError when the basis is null.
HomologyResult homology_of_critical(const CriticalComplex& cc, std::size_t kmax);

}  // namespace kz1
