#pragma once

#include <cstddef>
#include <random>

#include "kz1/chain.hpp"
#include "kz1/integer.hpp"
#include "kz1/simplex.hpp"

namespace kz1 {

using Rng = std::mt19937_64;

/// Nonzero integer whose bit length is uniform in [1, max_bits], so small and
/// large magnitudes are equally likely. Negative with probability 1/2 when allowed.
Integer random_entry(Rng& rng, std::size_t max_bits, bool allow_negative);

BarSimplex random_simplex(Rng& rng, std::size_t dim, std::size_t max_bits, bool allow_negative);

/// Between 1 and max_terms random simplices of dimension dim with coefficients
/// in [-coeff_bound, coeff_bound] \ {0}. Repeated simplices merge, so the
/// result may have fewer terms.
Chain random_chain(Rng& rng, std::size_t dim, std::size_t max_terms, std::size_t max_bits, bool allow_negative,
                   long coeff_bound = 5);

/// Random bit-chipping target of dimension 1..dim_max with entries below
/// 2^max_bits. Entries are powers of two a third of the time so dyadic parts,
/// peaks, and fully dyadic targets all show up. Found by rejection.
BarSimplex random_bc_target(Rng& rng, std::size_t dim_max, std::size_t max_bits);

}  // namespace kz1
