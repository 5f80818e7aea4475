#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "kz1/chain.hpp"
#include "kz1/errors.hpp"
#include "kz1/reduction.hpp"

using namespace kz1;

namespace {

Chain term(std::initializer_list<Integer> s, long c) { return Chain::basis(BarSimplex(s), c); }

}  // namespace

TEST_CASE("integer parsing and bit length") {
    CHECK(parse_integer("-123456789012345678901234567890").str() == "-123456789012345678901234567890");
    CHECK(parse_integer("+17") == 17);
    CHECK_THROWS_AS(parse_integer(""), ParseError);
    CHECK_THROWS_AS(parse_integer("1x"), ParseError);
    CHECK(bit_length(Integer(0)) == 0);
    CHECK(bit_length(Integer(-8)) == 4);
    CHECK(is_power_of_two(Integer(1) << 200));
    CHECK_FALSE(is_power_of_two(Integer(12)));
}

TEST_CASE("chain addition cancels and doubles") {
    CHECK(term({3}, 1) + term({5}, 2) + term({3}, -1) == term({5}, 2));
    CHECK(term({4}, 1) + Chain(1) == term({4}, 1));
    CHECK(term({2, 3}, 1) + term({2, 3}, 1) == term({2, 3}, 2));
    CHECK((term({3}, 1) - term({3}, 1)).empty());
}

TEST_CASE("chain scaling") {
    CHECK(chain_scale(0, term({7}, 1)).empty());
    CHECK(chain_scale(-1, term({1, 1}, 2)) == term({1, 1}, -2));
    CHECK(chain_scale(3, term({4}, 1) - term({2}, 1)) == term({4}, 3) - term({2}, 3));
}

TEST_CASE("coefficients are exact at any magnitude") {
    const Integer big = Integer(1) << 300;
    Chain c = Chain::basis(BarSimplex{5}, big);
    c += Chain::basis(BarSimplex{5}, big);
    CHECK(c.coefficient(BarSimplex{5}) == big * 2);
    c.add_term(BarSimplex{5}, -big * 2);
    CHECK(c.empty());
}

TEST_CASE("chains reject degenerate simplices and mixed dimensions") {
    CHECK_THROWS_AS(Chain::basis(BarSimplex{0, 3}), PreconditionError);
    Chain c(1);
    CHECK_THROWS_AS(c.add_term(BarSimplex{1, 2}, 1), PreconditionError);
    CHECK_THROWS_AS(term({1}, 1) + term({1, 1}, 1), PreconditionError);
    CHECK_THROWS_AS(Chain(-2), PreconditionError);
}

TEST_CASE("terms iterate in lexicographic order and from_terms merges") {
    std::vector<std::pair<BarSimplex, Integer>> terms;
    for (int i = 0; i < 100; ++i) {
        terms.emplace_back(BarSimplex{(i * 37) % 11 - 5 == 0 ? 1 : (i * 37) % 11 - 5}, 1);
    }
    const Chain c = Chain::from_terms(1, terms);
    Chain slow(1);
    for (const auto& [s, k] : terms) {
        slow.add_term(s, k);
    }
    CHECK(c == slow);
    const BarSimplex* prev = nullptr;
    for (const auto& [s, k] : c.terms()) {
        CHECK(k != 0);
        if (prev) {
            CHECK(*prev < s);
        }
        prev = &s;
    }
}

TEST_CASE("format_chain") {
    CHECK(format_chain(Chain(2)) == "0");
    CHECK(format_chain(term({5}, 2) - term({3}, 1)) == "-1*[3] + 2*[5]");
}

// A toy reduction of the complex Z[a] <- Z[b], d(b) = a (dim 1 -> dim 0), onto
// the zero complex, written with simplices standing in for generators.
namespace {

const BarSimplex a{};
const BarSimplex b{1};

Chain toy_d(const Chain& c) {
    if (c.dim() != 1) {
        return Chain(c.dim() - 1);
    }
    return Chain::basis(a, c.coefficient(b));
}

Reduction toy(bool corrupt) {
    Reduction r;
    r.source = "toy";
    r.target = "zero";
    r.f = [](const Chain& c) { return Chain(c.dim()); };
    r.g = [](const Chain& c) { return Chain(c.dim()); };
    r.h = [corrupt](const Chain& c) {
        if (c.dim() != 0) {
            return Chain(c.dim() + 1);
        }
        return Chain::basis(b, corrupt ? Integer(-c.coefficient(a)) : c.coefficient(a));
    };
    return r;
}

}  // namespace

TEST_CASE("verify_reduction accepts a correct reduction and catches a sign flip") {
    const ChainMap zero_d = [](const Chain& c) { return Chain(c.dim() - 1); };
    const std::vector<Chain> big = {Chain::basis(a, 3), Chain::basis(b, -2)};
    const std::vector<Chain> small = {Chain(0), Chain(1)};
    CHECK(verify_reduction(toy(false), toy_d, zero_d, big, small).all_passed());
    const ReductionReport bad = verify_reduction(toy(true), toy_d, zero_d, big, small);
    CHECK_FALSE(bad.all_passed());
    const IdentityCheck* homotopy = bad.find("d∘h + h∘d = 1 − g∘f");
    REQUIRE(homotopy != nullptr);
    CHECK_FALSE(homotopy->passed);
    REQUIRE(homotopy->counterexample.has_value());
}

TEST_CASE("verify_reduction on empty samples passes vacuously") {
    const ChainMap zero_d = [](const Chain& c) { return Chain(c.dim() - 1); };
    const ReductionReport r = verify_reduction(toy(true), toy_d, zero_d, {}, {});
    CHECK(r.all_passed());
    for (const auto& check : r.checks) {
        CHECK(check.samples == 0);
    }
}

TEST_CASE("composition with the identity reduction") {
    const Reduction rho = toy(false);
    const Reduction left = compose_reductions(identity_reduction("toy"), rho);
    const Reduction right = compose_reductions(rho, identity_reduction("zero"));
    for (const Chain& c : {Chain::basis(a, 5), Chain::basis(b, 7)}) {
        CHECK(left.h(c) == rho.h(c));
        CHECK(right.h(c) == rho.h(c));
        CHECK(left.f(c) == rho.f(c));
        CHECK(right.g(rho.f(c)) == rho.g(rho.f(c)));
    }
    CHECK_THROWS_AS(compose_reductions(rho, identity_reduction("toy")), PreconditionError);
}
