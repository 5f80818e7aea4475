#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "kz1/errors.hpp"
#include "kz1/fields.hpp"
#include "kz1/io.hpp"
#include "kz1/sampling.hpp"

using namespace kz1;

TEST_CASE("chain JSON layout") {
    Chain c = Chain::basis(parse_simplex("[5|-3]"), 2);
    c.add_term(parse_simplex("[1|1]"), -1);
    CHECK(chain_to_json(c) ==
          R"({"dim":2,"terms":[{"simplex":[1,1],"coeff":"-1"},{"simplex":[5,-3],"coeff":"2"}]})");
    CHECK(chain_to_json(Chain(-1)) == R"({"dim":-1,"terms":[]})");
}

TEST_CASE("chain JSON round trip with large entries") {
    Rng rng(41);
    for (int n = 0; n < 100; ++n) {
        const Chain c = random_chain(rng, rng() % 5, 5, 200, true, 1000000);
        CHECK(chain_from_json(chain_to_json(c)) == c);
        CHECK(chain_from_json(chain_to_json(c, 2)) == c);
    }
    const Chain big = chain_from_json(
        R"({"dim":1,"terms":[{"simplex":["-340282366920938463463374607431768211457"],"coeff":"99999999999999999999"}]})");
    CHECK(format_chain(big) == "99999999999999999999*[-340282366920938463463374607431768211457]");
    CHECK(chain_to_json(big).find(R"("simplex":["-340282366920938463463374607431768211457"])") != std::string::npos);
}

TEST_CASE("chain JSON merges repeats and rejects bad input") {
    const Chain c = chain_from_json(
        R"({"dim":1,"terms":[{"simplex":[3],"coeff":"1"},{"simplex":[3],"coeff":2},{"simplex":[4],"coeff":"0"}]})");
    CHECK(c == Chain::basis(BarSimplex{3}, 3));
    CHECK_THROWS_AS(chain_from_json("{"), ParseError);
    CHECK_THROWS_AS(chain_from_json(R"({"terms":[]})"), ParseError);
    CHECK_THROWS_AS(chain_from_json(R"({"dim":1,"terms":[{"simplex":[3]}]})"), ParseError);
    CHECK_THROWS_AS(chain_from_json(R"({"dim":1,"terms":[{"simplex":[3.5],"coeff":"1"}]})"), ParseError);
    CHECK_THROWS_AS(chain_from_json(R"({"dim":1,"terms":[{"simplex":[0],"coeff":"1"}]})"), PreconditionError);
    CHECK_THROWS_AS(chain_from_json(R"({"dim":2,"terms":[{"simplex":[4],"coeff":"1"}]})"), PreconditionError);
}

TEST_CASE("classification JSON") {
    CHECK(classification_to_json(BarSimplex{7}, composed_classify(BarSimplex{7})) ==
          R"({"simplex":"[7]","layer":"bc","class":"source","partner":"[4|3]","regular_index":1})");
    CHECK(classification_to_json(BarSimplex{1}, composed_classify(BarSimplex{1})) ==
          R"({"simplex":"[1]","layer":"bc","class":"critical","partner":null,"regular_index":null})");
}

TEST_CASE("reach and trace JSON") {
    ReachResult r;
    r.nodes = 3;
    r.total_size = 7;
    r.edges = 2;
    CHECK(reach_to_json(BarSimplex{4}, r) == R"({"seed":"[4]","nodes":3,"total_size":7,"edges":2,"cycle":false})");
    const std::vector<TraceStep> steps = {{0, Move{MoveKind::up, 1, BarSimplex{1, 2}}},
                                          {1, Move{MoveKind::down, 0, BarSimplex{2}}}};
    const std::string t = trace_to_json(steps);
    CHECK(t.find(R"("kind": "V")") != std::string::npos);
    CHECK(t.find(R"("kind": "face")") != std::string::npos);
}
