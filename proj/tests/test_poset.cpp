#include <map>

#include <catch2/catch_amalgamated.hpp>

#include "stirling/poset.hpp"
#include "stirling/stirling_polynomials.hpp"
#include "support/oracles.hpp"

using namespace stirling;

namespace {
MultisetShape sh(const char* text) { return MultisetShape::parse(text); }
}

TEST_CASE("cover relation of small shapes", "[poset]") {
    const KStirlingPoset p = build_poset(sh("2,2"));
    CHECK(p.base.n == 4);
    CHECK(p.base.covers ==
          std::vector<std::pair<int, int>>{{1, 2}, {2, 4}, {3, 4}});

    const KStirlingPoset q = build_poset(sh("1,3,1,4"));
    CHECK(q.base.n == 9);
    CHECK(q.base.covers == std::vector<std::pair<int, int>>{{1, 3},
                                                            {2, 3},
                                                            {3, 4},
                                                            {4, 7},
                                                            {5, 7},
                                                            {6, 7},
                                                            {7, 8},
                                                            {8, 9}});

    CHECK(build_poset(sh("1,1,1")).base.covers.empty());  // antichain
    CHECK(build_poset(MultisetShape{}).base.n == 0);
}

TEST_CASE("every element has at most one parent", "[poset]") {
    for (const auto& shape : oracles::sample_shapes(20, 5, 4, 31u)) {
        const KStirlingPoset p = build_poset(shape);
        std::map<int, int> parents;
        for (const auto& [lo, hi] : p.base.covers) {
            (void)hi;
            CHECK(++parents[lo] == 1);
        }
    }
}

TEST_CASE("order polynomial matches direct map counting", "[poset]") {
    for (const char* text : {"", "1", "3", "2,2", "1,2", "2,1", "1,1,2", "2,3", "1,2,2"}) {
        const KStirlingPoset p = build_poset(sh(text));
        for (int m = 0; m <= 4; ++m) {
            CHECK(omega(p, m, false) == oracles::naive_omega(p.base, m, false));
            CHECK(omega(p, m, true) == oracles::naive_omega(p.base, m, true));
        }
    }
}

TEST_CASE("order polynomial reproduces both value families", "[poset]") {
    for (const auto& shape : oracles::sample_shapes(15, 4, 4, 40u)) {
        const KStirlingPoset p = build_poset(shape);
        for (int m = 0; m <= 5; ++m) {
            CHECK(omega(p, m, false) == B_rec(shape, m));
            CHECK(omega(p, m, true) == b_rec(shape, m));
        }
    }
}

TEST_CASE("order polynomial on a non-forest", "[poset]") {
    // diamond with two parents per minimal element; exercises the traversal
    // route rather than the tree decomposition
    const LabeledPoset diamond{4, {{1, 3}, {2, 3}, {1, 4}, {2, 4}}};
    for (int m = 0; m <= 4; ++m) {
        CHECK(omega(diamond, m, false) == oracles::naive_omega(diamond, m, false));
        CHECK(omega(diamond, m, true) == oracles::naive_omega(diamond, m, true));
    }
}

TEST_CASE("degenerate cases", "[poset]") {
    const LabeledPoset empty{0, {}};
    CHECK(omega(empty, 3, false) == 1);
    CHECK(omega(empty, 0, true) == 1);
    const LabeledPoset chain{2, {{1, 2}}};
    CHECK(omega(chain, 0, false) == 0);
}

TEST_CASE("invalid posets are rejected", "[poset]") {
    CHECK_THROWS_AS(omega(LabeledPoset{2, {{1, 2}, {2, 1}}}, 3, false), parameter_error);
    CHECK_THROWS_AS(omega(LabeledPoset{2, {{1, 5}}}, 3, false), parameter_error);
    CHECK_THROWS_AS(omega(LabeledPoset{2, {{0, 1}}}, 3, false), parameter_error);
    CHECK_THROWS_AS(omega(build_poset(sh("2,2")), -1, false), parameter_error);
}

TEST_CASE("work budget limits counting", "[poset]") {
    CHECK_THROWS_AS(omega(build_poset(sh("2,2")), 5, false, 1), budget_error);
    const LabeledPoset diamond{4, {{1, 3}, {2, 3}, {1, 4}, {2, 4}}};
    CHECK_THROWS_AS(omega(diamond, 100, false, 10), budget_error);
}
