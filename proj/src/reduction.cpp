#include "kz1/reduction.hpp"

#include <algorithm>

#include "kz1/errors.hpp"

namespace kz1 {

Reduction identity_reduction(const std::string& complex) {
    return Reduction{
        complex,
        complex,
        [](const Chain& c) { return c; },
        [](const Chain& c) { return c; },
        [](const Chain& c) { return Chain(c.dim() + 1); },
    };
}

Reduction compose_reductions(const Reduction& first, const Reduction& second) {
    if (first.target != second.source) {
        throw PreconditionError("cannot compose reductions: '" + first.target + "' is not '" + second.source + "'");
    }
    auto f1 = first.f, g1 = first.g, h1 = first.h;
    auto f2 = second.f, g2 = second.g, h2 = second.h;
    return Reduction{
        first.source,
        second.target,
        [f1, f2](const Chain& c) { return f2(f1(c)); },
        [g1, g2](const Chain& c) { return g1(g2(c)); },
        [f1, g1, h1, h2](const Chain& c) { return h1(c) + g1(h2(f1(c))); },
    };
}

bool ReductionReport::all_passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const IdentityCheck& c) { return c.passed; });
}

const IdentityCheck* ReductionReport::find(const std::string& identity) const {
    for (const auto& c : checks) {
        if (c.identity == identity) {
            return &c;
        }
    }
    return nullptr;
}

namespace {

// Two sides of an identity are compared as chains; a thrown precondition
// (e.g. mismatched dimensions) counts as a failure of the identity.
void run_check(IdentityCheck& check, std::span<const Chain> samples,
               const std::function<bool(const Chain&)>& holds) {
    for (const auto& c : samples) {
        ++check.samples;
        bool ok = false;
        try {
            ok = holds(c);
        } catch (const PreconditionError&) {
            ok = false;
        }
        if (!ok) {
            check.passed = false;
            check.counterexample = c;
            return;
        }
    }
}

}  // namespace

ReductionReport verify_reduction(const Reduction& rho, const ChainMap& d_big, const ChainMap& d_small,
                                 std::span<const Chain> big_samples, std::span<const Chain> small_samples) {
    ReductionReport report;
    auto add = [&](const std::string& name, std::span<const Chain> samples, std::function<bool(const Chain&)> holds) {
        IdentityCheck check;
        check.identity = name;
        run_check(check, samples, holds);
        report.checks.push_back(std::move(check));
    };

    add("f∘g = 1", small_samples, [&](const Chain& c) { return rho.f(rho.g(c)) == c; });
    add("d∘h + h∘d = 1 − g∘f", big_samples, [&](const Chain& c) {
        return d_big(rho.h(c)) + rho.h(d_big(c)) == c - rho.g(rho.f(c));
    });
    add("f∘h = 0", big_samples, [&](const Chain& c) { return rho.f(rho.h(c)).empty(); });
    add("h∘g = 0", small_samples, [&](const Chain& c) { return rho.h(rho.g(c)).empty(); });
    add("h∘h = 0", big_samples, [&](const Chain& c) { return rho.h(rho.h(c)).empty(); });
    add("f∘d = d∘f", big_samples, [&](const Chain& c) { return rho.f(d_big(c)) == d_small(rho.f(c)); });
    add("g∘d = d∘g", small_samples, [&](const Chain& c) { return rho.g(d_small(c)) == d_big(rho.g(c)); });
    return report;
}

}  // namespace kz1
