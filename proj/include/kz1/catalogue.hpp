#pragma once

#include <string>
#include <vector>

#include "kz1/simplex.hpp"

namespace kz1 {

// Closed-form description of the double moves tau -> V_bc(d_j tau) on
// bit-chipping targets, case by case. Used as an oracle against the
// enumeration in double_move_successors_bc.

struct CataloguePrediction {
    std::string label;  ///< "A".."I", "dA".."dD", "dI"
    BarSimplex face;    ///< the source d_j tau
    BarSimplex successor;
};

/// Predicted successors of a bit-chipping target. Throws PreconditionError
/// unless tau is a V_bc target.
std::vector<CataloguePrediction> catalogue_predictions(const BarSimplex& tau);

/// Compares the enumerated successors of tau with the predictions. Returns
/// an empty string on agreement, otherwise a description of the first
/// mismatch: an enumerated successor matched by no case or by several, or a
/// prediction that does not occur.
std::string catalogue_mismatch(const BarSimplex& tau);

/// The acyclicity ranking: true iff the move tau -> tau_prime strictly
/// decreases it. For tau not fully dyadic the dyadic length grows, or it
/// stays and the breakpoint value drops, or both stay and the dyadic part
/// grows lexicographically. For tau fully dyadic, tau_prime is fully dyadic
/// and the component sum drops, or it stays and tau_prime grows
/// lexicographically.
bool ranking_decreases(const BarSimplex& tau, const BarSimplex& tau_prime);

}  // namespace kz1
