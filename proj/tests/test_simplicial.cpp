#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "kz1/errors.hpp"
#include "kz1/sampling.hpp"
#include "kz1/simplicial.hpp"

using namespace kz1;

TEST_CASE("face operators") {
    CHECK(face(1, parse_simplex("[3|-2|5]")) == parse_simplex("[1|5]"));
    CHECK(face(0, parse_simplex("[7]")) == BarSimplex{});
    CHECK(face(1, parse_simplex("[7]")) == BarSimplex{});
    CHECK(face(3, parse_simplex("[1|1|1]")) == parse_simplex("[1|1]"));
    CHECK(face(2, parse_simplex("[1|1|1]")) == parse_simplex("[1|2]"));
    CHECK(face(0, parse_simplex("[3|5]")) == BarSimplex{5});
    CHECK_THROWS_AS(face(3, parse_simplex("[1|1]")), PreconditionError);
    CHECK_THROWS_AS(face(0, BarSimplex{}), PreconditionError);
}

TEST_CASE("degeneracies insert a zero") {
    CHECK(degeneracy(0, BarSimplex{3}) == BarSimplex{0, 3});
    CHECK(degeneracy(1, BarSimplex{3}) == BarSimplex{3, 0});
    CHECK(degeneracy(0, BarSimplex{}) == BarSimplex{0});
    const BarSimplex s{4, -1, 9};
    for (std::size_t i = 0; i <= s.dim(); ++i) {
        CHECK(degeneracy(i, s).is_degenerate());
    }
}

TEST_CASE("simplicial identities hold on random simplices") {
    Rng rng(11);
    for (int n = 0; n < 200; ++n) {
        const BarSimplex s = random_simplex(rng, 2 + rng() % 4, 20, true);
        const std::size_t k = s.dim();
        for (std::size_t j = 1; j <= k; ++j) {
            for (std::size_t i = 0; i < j; ++i) {
                // d_i d_j = d_{j-1} d_i for i < j
                CHECK(face(i, face(j, s)) == face(j - 1, face(i, s)));
            }
        }
        for (std::size_t i = 0; i <= k; ++i) {
            // d_i s_i = d_{i+1} s_i = id
            CHECK(face(i, degeneracy(i, s)) == s);
            CHECK(face(i + 1, degeneracy(i, s)) == s);
        }
    }
}

TEST_CASE("differential") {
    KZ1 space;
    CHECK(differential(space, Chain::basis(parse_simplex("[3|5]"))) ==
          Chain::basis(BarSimplex{5}) - Chain::basis(BarSimplex{8}) + Chain::basis(BarSimplex{3}));
    CHECK(differential(space, Chain::basis(BarSimplex{42})).empty());
    const Chain zero = differential(space, Chain::basis(BarSimplex{}));
    CHECK(zero.empty());
    CHECK(zero.dim() == -1);
    // degenerate faces drop out: d_1 [2|-2] = [0]
    CHECK(differential(space, Chain::basis(parse_simplex("[2|-2]"))) ==
          Chain::basis(BarSimplex{-2}) + Chain::basis(BarSimplex{2}));
}

TEST_CASE("d squares to zero") {
    KZ1 space;
    Rng rng(12);
    for (std::size_t k = 0; k <= 5; ++k) {
        for (int n = 0; n < 40; ++n) {
            const Chain c = random_chain(rng, k, 5, 40, true);
            CHECK(differential(space, differential(space, c)).empty());
        }
    }
}

TEST_CASE("b-tuples") {
    CHECK(to_btuple(parse_simplex("[3|-2|5]")) == BTuple({0, 3, 1, 6}));
    CHECK(to_btuple(BarSimplex{}) == BTuple());
    CHECK(BTuple({5, 8, 6}) == BTuple({0, 3, 1}));
    CHECK(btuple_face(0, BTuple({0, 3, 1, 6})) == BTuple({0, -2, 3}));
    CHECK(btuple_face(1, BTuple({0, 3, 1, 6})) == BTuple({0, 1, 6}));
    Rng rng(13);
    for (int n = 0; n < 200; ++n) {
        const BarSimplex s = random_simplex(rng, 1 + rng() % 5, 70, true);
        CHECK(from_btuple(to_btuple(s)) == s);
        for (std::size_t i = 0; i <= s.dim(); ++i) {
            CHECK(to_btuple(face(i, s)) == btuple_face(i, to_btuple(s)));
        }
    }
}

TEST_CASE("size") {
    CHECK(size(BarSimplex{1}) == 2);
    CHECK(size(BarSimplex{}) == 0);
    CHECK(size(parse_simplex("[7|1]")) == 6);
    CHECK(entry_size(Integer(-1)) == 2);
    CHECK(entry_size(Integer(1) << 64) == 65);
}

TEST_CASE("parsing and formatting") {
    CHECK(parse_simplex("[]") == BarSimplex{});
    CHECK(parse_simplex("[ 3 | -2 | 5 ]") == BarSimplex{3, -2, 5});
    CHECK(parse_simplex("[0,3,1,6]") == BarSimplex{3, -2, 5});
    CHECK(parse_simplex("[7]") == BarSimplex{7});
    CHECK(format_bar(BarSimplex{3, -2, 5}) == "[3|-2|5]");
    CHECK(format_btuple(to_btuple(BarSimplex{3, -2, 5})) == "[0,3,1,6]");
    const std::string big = "[340282366920938463463374607431768211457|-1]";
    CHECK(format_bar(parse_simplex(big)) == big);
    CHECK_THROWS_AS(parse_simplex("3|4"), ParseError);
    CHECK_THROWS_AS(parse_simplex("[3|4,5]"), ParseError);
    CHECK_THROWS_AS(parse_simplex("[3||4]"), ParseError);
    CHECK_THROWS_AS(parse_simplex("[a]"), ParseError);
}
