#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "kz1/chain.hpp"

namespace kz1 {

using ChainMap = std::function<Chain(const Chain&)>;

/// A reduction from a big complex to a small one: chain maps f (big -> small)
/// and g (small -> big) and a degree +1 homotopy h on the big complex with
///   f g = 1,  d h + h d = 1 - g f,  f h = 0,  h g = 0,  h h = 0.
/// Complexes are identified by name so composition can check that they line up.
struct Reduction {
    std::string source;
    std::string target;
    ChainMap f;
    ChainMap g;
    ChainMap h;
};

/// f = g = identity, h = 0 on the named complex.
Reduction identity_reduction(const std::string& complex);

/// (f' f, g g', h + g h' f) for `first` = (f, g, h) and `second` = (f', g', h').
/// Throws PreconditionError unless first.target == second.source.
Reduction compose_reductions(const Reduction& first, const Reduction& second);

struct IdentityCheck {
    std::string identity;
    bool passed = true;
    std::size_t samples = 0;
    std::optional<Chain> counterexample;
};

struct ReductionReport {
    std::vector<IdentityCheck> checks;

    bool all_passed() const;
    const IdentityCheck* find(const std::string& identity) const;
};

/// Checks every reduction identity and both chain-map conditions pointwise.
/// `big_samples` live in the source complex, `small_samples` in the target.
/// Failures become report entries carrying the first failing chain.
ReductionReport verify_reduction(const Reduction& rho, const ChainMap& d_big, const ChainMap& d_small,
                                 std::span<const Chain> big_samples, std::span<const Chain> small_samples);

}  // namespace kz1
