#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "kz1/errors.hpp"
#include "kz1/fields.hpp"
#include "kz1/homology.hpp"
#include "kz1/verify.hpp"

using namespace kz1;

namespace {

IntegerMatrix mat(std::initializer_list<std::initializer_list<long>> rows) {
    IntegerMatrix m;
    for (const auto& r : rows) {
        m.emplace_back();
        for (long x : r) {
            m.back().emplace_back(x);
        }
    }
    return m;
}

}  // namespace

TEST_CASE("Smith normal form") {
    // gcd of entries is 2 and |det| = 8, so the diagonal is 2, 4
    CHECK(smith_diagonal(mat({{2, 4}, {6, 8}})) == std::vector<Integer>{2, 4});
    CHECK(smith_diagonal(mat({{0, 0}, {0, 0}})).empty());
    CHECK(smith_diagonal(mat({{2, 0}, {0, 3}})) == std::vector<Integer>{1, 6});
    CHECK(smith_diagonal(mat({{4}})) == std::vector<Integer>{4});
    // boundary of the real projective plane's minimal cell structure: Z/2
    CHECK(smith_diagonal(mat({{2}})) == std::vector<Integer>{2});
    const auto d = smith_diagonal(mat({{3, 1, 4}, {1, 5, 9}, {2, 6, 5}}));
    // |det| = 90, gcd of entries 1, gcd of 2x2 minors 1
    CHECK(d == std::vector<Integer>{1, 1, 90});
}

TEST_CASE("Smith diagonal is a divisibility chain") {
    const auto d = smith_diagonal(mat({{6, 0, 0}, {0, 10, 0}, {0, 0, 15}}));
    REQUIRE(d.size() == 3);
    for (std::size_t i = 0; i + 1 < d.size(); ++i) {
        CHECK(d[i + 1] % d[i] == 0);
    }
    CHECK(d[0] * d[1] * d[2] == 900);
}

TEST_CASE("homology from matrices") {
    // zero complex
    HomologyResult h = homology_from_matrices({0, 0, 0}, {{}, {}, {}}, 1);
    CHECK(h.groups[0].rank == 0);
    CHECK(h.groups[1].rank == 0);
    // rank one in dims 0 and 1, zero differential
    h = homology_from_matrices({1, 1, 0}, {{}, mat({{0}}), IntegerMatrix(1)}, 1);
    CHECK(format_group(h.groups[0]) == "Z");
    CHECK(format_group(h.groups[1]) == "Z");
    // Z <-2- Z: H0 = Z/2, H1 = 0
    h = homology_from_matrices({1, 1, 0}, {{}, mat({{2}}), IntegerMatrix(1)}, 1);
    CHECK(format_group(h.groups[0]) == "Z/2");
    CHECK(format_group(h.groups[1]) == "0");
}

TEST_CASE("homology of the composed critical complex") {
    auto fr = reduction_from_field(std::make_shared<KZ1>(), std::make_shared<ComposedField>(),
                                   composed_critical_basis);
    const HomologyResult h = homology_of_critical(fr.critical, 5);
    REQUIRE(h.groups.size() == 6);
    CHECK(format_group(h.groups[0]) == "Z");
    CHECK(format_group(h.groups[1]) == "Z");
    for (std::size_t k = 2; k <= 5; ++k) {
        CHECK(format_group(h.groups[k]) == "0");
    }
    // the basis order does not matter
    CriticalComplex reversed = fr.critical;
    reversed.basis = [](std::size_t k) {
        auto b = composed_critical_basis(k);
        std::reverse(b.begin(), b.end());
        return b;
    };
    const HomologyResult r = homology_of_critical(reversed, 5);
    for (std::size_t k = 0; k <= 5; ++k) {
        CHECK(format_group(r.groups[k]) == format_group(h.groups[k]));
    }
    CriticalComplex no_basis = fr.critical;
    no_basis.basis = nullptr;
    CHECK_THROWS_AS(homology_of_critical(no_basis, 2), PreconditionError);
}

TEST_CASE("log-log fit recovers a power law") {
    std::vector<double> xs, ys;
    for (int n = 1; n <= 10; ++n) {
        xs.push_back(n);
        ys.push_back(5.0 * n * n * n);
    }
    const SlopeFit fit = loglog_fit(xs, ys);
    CHECK(fit.slope == doctest::Approx(3.0));
    CHECK(fit.r_squared == doctest::Approx(1.0));
    CHECK(std::exp(fit.intercept) == doctest::Approx(5.0));
    CHECK_THROWS_AS(loglog_fit({1.0}, {1.0}), PreconditionError);
    CHECK_THROWS_AS(loglog_fit({2.0, 2.0}, {1.0, 3.0}), PreconditionError);
}

TEST_CASE("scaling benchmark") {
    KZ1 space;
    EmlField eml;
    ComposedField composed;
    const auto eml_records = scaling_bench(space, eml, seeds_from_pattern("pow2:1..10"), 1'000'000);
    for (const auto& r : eml_records) {
        // the path [a] -> [1|a-1] -> [a-1] -> ... visits 2a - 1 simplices
        const std::size_t a = static_cast<std::size_t>(r.seed[0]);
        CHECK(r.nodes == 2 * a - 1);
        CHECK(r.total_size >= r.nodes - 1);
        CHECK(r.status == "ok");
    }
    const auto capped = scaling_bench(space, eml, {BarSimplex{Integer(1) << 20}}, 1000);
    CHECK(capped[0].status == "budget");
    CHECK(capped[0].nodes == 1000);
    const auto c1 = scaling_bench(space, composed, seeds_from_pattern("pow2:4..30"), 1'000'000);
    const auto c2 = scaling_bench(space, composed, seeds_from_pattern("pow2:4..30"), 1'000'000);
    REQUIRE(c1.size() == 27);
    std::vector<double> xs, ys;
    for (std::size_t i = 0; i < c1.size(); ++i) {
        CHECK(c1[i].nodes == c2[i].nodes);
        CHECK(c1[i].total_size == c2[i].total_size);
        xs.push_back(static_cast<double>(c1[i].n_bits));
        ys.push_back(static_cast<double>(c1[i].total_size));
    }
    CHECK(loglog_fit(xs, ys).slope <= 3.0);
    CHECK(c1.back().nodes < eml_records.back().nodes);
    std::ostringstream csv;
    write_bench_csv(csv, c1);
    CHECK(csv.str().rfind("field,seed,n_bits,nodes,total_size,edges,wall_ms,status\n", 0) == 0);
    CHECK(csv.str().find("composed,\"[16]\",5,") != std::string::npos);
}

TEST_CASE("seed patterns") {
    CHECK(seeds_from_pattern("pow2:3..4") == std::vector<BarSimplex>{BarSimplex{8}, BarSimplex{16}});
    CHECK(to_btuple(seeds_from_pattern("lower-bound:2..2")[0]) == BTuple(bs_lower_bound_seed(2)));
    CHECK_THROWS_AS(seeds_from_pattern("pow2:x"), ParseError);
    CHECK_THROWS_AS(seeds_from_pattern("/nonexistent/seeds.txt"), ParseError);
}

TEST_CASE("exhaustive admissibility") {
    KZ1 space;
    ComposedField composed;
    EmlField eml;
    BrokenField broken;
    const AdmissibilityReport c = exhaustive_admissibility(space, composed, 3, 8);
    CHECK(c.simplices == 1 + 16 + 256 + 4096);
    CHECK(c.clean());
    CHECK(exhaustive_admissibility(space, eml, 3, 8).clean());
    const AdmissibilityReport b = exhaustive_admissibility(space, broken, 1, 3);
    REQUIRE_FALSE(b.clean());
    CHECK(b.violations[0].kind == "cycle");
}

TEST_CASE("guided search finds the lower-bound witness") {
    const auto result = guided_bs_search(bs_lower_bound_seed(6),
                                         parse_tuple("[2,1,2,1,3,1,3,4,5,1,5,1,5,6,7,1,7,1,7]"), 100000);
    REQUIRE(result.found);
    CHECK(result.path.front() == bs_lower_bound_seed(6));
    for (std::size_t i = 0; i + 1 < result.path.size(); ++i) {
        const auto moves = bs_double_moves(result.path[i]);
        CHECK(std::any_of(moves.begin(), moves.end(),
                          [&](const BsDoubleMove& m) { return m.tuple == result.path[i + 1]; }));
    }
    const auto miss = guided_bs_search(bs_lower_bound_seed(2), parse_tuple("[9,9,9]"), 50);
    CHECK_FALSE(miss.found);
}

TEST_CASE("lower-bound family grows with the number of blocks") {
    KZ1 space;
    BubblesortField bs;
    std::vector<std::size_t> nodes;
    for (std::size_t b = 1; b <= 3; ++b) {
        nodes.push_back(reach(space, bs, from_btuple(BTuple(bs_lower_bound_seed(b)))).nodes);
    }
    CHECK(nodes[0] < nodes[1]);
    CHECK(nodes[1] < nodes[2]);
}
