#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdlib>

#include "kz1/errors.hpp"
#include "kz1/fields.hpp"
#include "kz1/sampling.hpp"
#include "kz1/verify.hpp"

using namespace kz1;

namespace {

Chain basis(const char* s) { return Chain::basis(parse_simplex(s)); }

}  // namespace

TEST_CASE("regular face index") {
    CHECK(regular_face_index(BarSimplex{7}, parse_simplex("[4|3]")) == 1);
    CHECK(regular_face_index(BarSimplex{3}, parse_simplex("[1|2]")) == 1);
    CHECK(regular_face_index(parse_simplex("[5|2|7]"), parse_simplex("[4|1|2|7]")) == 1);
    // [1] is d_0 and d_2 of [1|1]: not regular
    CHECK_THROWS_AS(regular_face_index(BarSimplex{1}, parse_simplex("[1|1]")), std::logic_error);
    CHECK_THROWS_AS(regular_face_index(BarSimplex{9}, parse_simplex("[1|1]")), std::logic_error);
}

TEST_CASE("V_# signs and zeros") {
    ComposedField composed;
    EmlField eml;
    // [7] = d_1 [4|3], so the sign is (-1)^2
    const std::size_t i = regular_face_index(BarSimplex{7}, parse_simplex("[4|3]"));
    CHECK(v_sharp(composed, basis("[7]")) == Chain::basis(parse_simplex("[4|3]"), i % 2 == 1 ? 1 : -1));
    CHECK(v_sharp(eml, basis("[1|3]")).empty());
    CHECK(v_sharp(eml, basis("[]")).empty());
    CHECK(v_sharp(composed, basis("[]")).dim() == 1);
}

TEST_CASE("Phi on single simplices") {
    KZ1 space;
    ComposedField composed;
    CHECK(phi(space, composed, basis("[]")) == basis("[]"));
    // V([3]) = [2|1] with [3] = d_1, so V_#[3] = [2|1]; d[2|1] = [1] - [3] + [2];
    // d[3] = 0. Phi[3] = [3] + [1] - [3] + [2] = [1] + [2].
    CHECK(composed.classify(BarSimplex{3}).partner == parse_simplex("[2|1]"));
    CHECK(phi(space, composed, basis("[3]")) == basis("[1]") + basis("[2]"));
    Rng rng(21);
    std::size_t targets = 0;
    while (targets < 200) {
        const BarSimplex t = random_simplex(rng, 1 + rng() % 4, 24, true);
        if (composed.classify(t).is_target()) {
            ++targets;
            CHECK(phi(space, composed, Chain::basis(t)).coefficient(t) == 0);
        }
    }
}

TEST_CASE("Phi infinity on critical simplices") {
    KZ1 space;
    ComposedField composed;
    CHECK(phi_infinity(space, composed, basis("[]")) == basis("[]"));
    const Chain one = phi_infinity(space, composed, basis("[1]"));
    CHECK(one.coefficient(BarSimplex{1}) == 1);
    for (const auto& [s, c] : one.terms()) {
        if (s != BarSimplex{1}) {
            CHECK(composed.classify(s).is_target());
        }
    }
}

TEST_CASE("graph evaluation agrees with iterating Phi") {
    KZ1 space;
    ComposedField composed;
    EmlField eml;
    Rng rng(22);
    EvaluationOptions iterate;
    iterate.strategy = Evaluation::iterate;
    for (std::size_t k = 0; k <= 3; ++k) {
        for (int n = 0; n < 25; ++n) {
            const Chain c = random_chain(rng, k, 4, k <= 2 ? 20 : 8, true);
            const Stabilization a = stabilize(space, composed, c);
            const Stabilization b = stabilize(space, composed, c, iterate);
            CHECK(a.fixed_point == b.fixed_point);
            CHECK(a.homotopy == b.homotopy);
            const Chain small = random_chain(rng, k, 3, 4, true);
            CHECK(stabilize(space, eml, small).homotopy == stabilize(space, eml, small, iterate).homotopy);
        }
    }
}

TEST_CASE("stabilization limits") {
    KZ1 space;
    EmlField eml;
    EvaluationOptions tight;
    tight.strategy = Evaluation::iterate;
    tight.max_iterations = 10;
    CHECK_THROWS_AS(stabilize(space, eml, basis("[1000]"), tight), IterationCapExceeded);
    tight.strategy = Evaluation::dag;
    tight.max_nodes = 10;
    CHECK_THROWS_AS(stabilize(space, eml, basis("[1000]"), tight), BudgetExceeded);
    BrokenField broken;
    CHECK_THROWS_AS(stabilize(space, broken, basis("[3]")), AdmissibilityViolation);
}

TEST_CASE("iteration cap from the environment") {
    setenv("KZ1_ITERATION_CAP", "77", 1);
    CHECK(options_from_env().max_iterations == 77);
    unsetenv("KZ1_ITERATION_CAP");
    CHECK(options_from_env().max_iterations == EvaluationOptions{}.max_iterations);
}

TEST_CASE("reductions from fields satisfy every identity") {
    auto space = std::make_shared<KZ1>();
    const ChainMap d = [space](const Chain& c) { return differential(*space, c); };
    Rng rng(23);
    for (const std::string name : {"composed", "eml"}) {
        const FieldReduction fr = reduction_from_field(space, make_field(name), composed_critical_basis);
        for (std::size_t k = 0; k <= 4; ++k) {
            std::vector<Chain> big;
            for (int n = 0; n < 40; ++n) {
                big.push_back(random_chain(rng, k, 4, name == "eml" ? 4 : (k <= 3 ? 16 : 6), true));
            }
            std::vector<Chain> small;
            for (const auto& s : composed_critical_basis(k)) {
                small.push_back(Chain::basis(s, 3));
            }
            const ReductionReport report = verify_reduction(fr.reduction, d, fr.critical.differential, big, small);
            for (const auto& check : report.checks) {
                INFO(name << " dim " << k << " " << check.identity);
                CHECK(check.passed);
            }
        }
    }
}

TEST_CASE("critical differential and basis of the composed field") {
    const FieldReduction fr =
        reduction_from_field(std::make_shared<KZ1>(), std::make_shared<ComposedField>(), composed_critical_basis);
    CHECK(fr.critical.basis(0) == std::vector<BarSimplex>{BarSimplex{}});
    CHECK(fr.critical.basis(1) == std::vector<BarSimplex>{BarSimplex{1}});
    for (std::size_t k = 2; k <= 6; ++k) {
        CHECK(fr.critical.basis(k).empty());
    }
    CHECK(fr.critical.differential(basis("[1]")).empty());
    // f sends the cycle [a] to a[1]
    CHECK(fr.reduction.f(basis("[5]")) == Chain::basis(BarSimplex{1}, 5));
    CHECK(fr.reduction.f(basis("[-12]")) == Chain::basis(BarSimplex{1}, -12));
}

TEST_CASE("composing the bubblesort and bit-chipping reductions") {
    auto space = std::make_shared<KZ1>();
    const FieldReduction bs = reduction_from_field(space, std::make_shared<BubblesortField>(), nullptr, {},
                                                   "K(Z,1)", "K(N,1)");
    const FieldReduction bc = reduction_from_field(space, std::make_shared<BitChippingField>(),
                                                   composed_critical_basis, {}, "K(N,1)", "crit");
    const Reduction both = compose_reductions(bs.reduction, bc.reduction);
    const ChainMap d = [space](const Chain& c) { return differential(*space, c); };
    Rng rng(24);
    std::vector<Chain> big;
    for (int n = 0; n < 60; ++n) {
        big.push_back(random_chain(rng, 2, 4, 14, true));
    }
    const std::vector<Chain> small = {Chain(2)};
    CHECK(verify_reduction(both, d, bc.critical.differential, big, small).all_passed());
    // The reduction of the composed field is this composition.
    const FieldReduction composed =
        reduction_from_field(space, std::make_shared<ComposedField>(), composed_critical_basis);
    for (const auto& c : big) {
        CHECK(composed.reduction.f(c) == both.f(c));
        CHECK(composed.reduction.h(c) == both.h(c));
    }
}

TEST_CASE("V-boundary successors") {
    KZ1 space;
    EmlField eml;
    const auto up = vpartial_successors(space, eml, BarSimplex{3});
    REQUIRE(up.size() == 1);
    CHECK(up[0].kind == MoveKind::up);
    CHECK(up[0].simplex == parse_simplex("[1|2]"));
    const auto down = vpartial_successors(space, eml, parse_simplex("[1|2]"));
    REQUIRE(down.size() == 2);
    CHECK(down[0].simplex == BarSimplex{2});
    CHECK(down[0].index == 0);
    CHECK(down[1].simplex == BarSimplex{1});
    CHECK(down[1].index == 2);
    CHECK(vpartial_successors(space, eml, BarSimplex{}).empty());
    CHECK_THROWS_AS(vpartial_successors(space, eml, parse_simplex("[0|1]")), PreconditionError);
}

TEST_CASE("reach") {
    KZ1 space;
    EmlField eml;
    ComposedField composed;
    const ReachResult one = reach(space, composed, BarSimplex{1});
    CHECK(one.nodes == 1);
    CHECK(one.edges == 0);
    // [a] -> [1|a-1] -> [a-1] -> ... -> [1]
    const ReachResult path = reach(space, eml, BarSimplex{16});
    CHECK(path.nodes == 31);
    ReachOptions small;
    small.node_budget = 100;
    CHECK_THROWS_AS(reach(space, eml, BarSimplex{1 << 20}, small), BudgetExceeded);
    CHECK(reach(space, composed, BarSimplex{1 << 20}).nodes < 1000);
    BrokenField broken;
    CHECK_THROWS_AS(reach(space, broken, BarSimplex{3}), AdmissibilityViolation);
    const ReachResult r = reach(space, composed, parse_simplex("[5|-3|2]"));
    std::size_t total = 0;
    for (const auto& s : r.simplices) {
        total += size(s);
    }
    CHECK(total == r.total_size);
    CHECK(r.total_size >= r.nodes - 1);
}

TEST_CASE("trace lists moves in depth-first order") {
    KZ1 space;
    EmlField eml;
    const auto steps = trace(space, eml, BarSimplex{3}, 100);
    REQUIRE(steps.size() >= 2);
    CHECK(steps[0].move.kind == MoveKind::up);
    CHECK(steps[0].move.simplex == parse_simplex("[1|2]"));
    CHECK(steps[1].depth == 1);
    CHECK(trace(space, eml, BarSimplex{3}, 1).size() == 1);
}
