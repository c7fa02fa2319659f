#include <algorithm>

#include <catch2/catch_amalgamated.hpp>

#include "stirling/permutations.hpp"
#include "support/oracles.hpp"

using namespace stirling;

TEST_CASE("admissibility of words", "[permutations]") {
    CHECK(is_stirling_word({1, 2, 2, 1}));
    CHECK(is_stirling_word({2, 2, 1, 1}));
    CHECK_FALSE(is_stirling_word({2, 1, 2, 1}));
    CHECK_FALSE(is_stirling_word({2, 1, 1, 2}));
    CHECK(is_stirling_word({1, 2, 3, 2, 1}));
    CHECK(is_stirling_word({}));
    CHECK(is_stirling_word({1}));
}

TEST_CASE("admissibility matches the independent span check", "[permutations]") {
    for (const auto& w : oracles::multiset_words({2, 3, 1}))
        CHECK(is_stirling_word(w) == oracles::word_is_stirling(w));
}

TEST_CASE("shape membership", "[permutations]") {
    CHECK(word_matches_shape({1, 2, 2, 1}, MultisetShape::parse("2,2")));
    CHECK_FALSE(word_matches_shape({1, 2, 2}, MultisetShape::parse("2,2")));
    CHECK(word_matches_shape({}, MultisetShape{}));
}

TEST_CASE("enumeration matches filtering all multiset permutations", "[permutations]") {
    for (const char* text : {"2,2", "1,2,2", "3,1", "1,1,1,1", "2,3", "1,3,1,2"}) {
        const MultisetShape shape = MultisetShape::parse(text);
        auto words = enumerate_stirling_words(shape);
        CHECK(BigInt(words.size()) == sp_count(shape));
        std::vector<Word> expected;
        for (const auto& w : oracles::multiset_words(shape.multiplicities()))
            if (oracles::word_is_stirling(w)) expected.push_back(w);
        std::sort(words.begin(), words.end());
        std::sort(expected.begin(), expected.end());
        CHECK(words == expected);
    }
}

TEST_CASE("insertion order of enumeration is stable", "[permutations]") {
    const auto words = enumerate_stirling_words(MultisetShape::parse("2,2"));
    REQUIRE(words.size() == 3);
    CHECK(words[0] == Word{2, 2, 1, 1});
    CHECK(words[1] == Word{1, 2, 2, 1});
    CHECK(words[2] == Word{1, 1, 2, 2});
}

TEST_CASE("enumeration respects the work budget", "[permutations]") {
    CHECK_THROWS_AS(enumerate_stirling_words(MultisetShape::parse("1,1,1,1,1,1,1,1"), 100),
                    budget_error);
}

TEST_CASE("descent indices", "[permutations]") {
    CHECK(descents({1, 1, 2, 2}) == std::vector<int>{4});
    CHECK(descents({2, 2, 1, 1}) == std::vector<int>{2, 4});
    CHECK(descents({1, 1, 1}) == std::vector<int>{3});
    CHECK(descents({}).empty());
    CHECK(descents({2, 1, 2}).empty() == false);  // not admissible, still well-defined
}

TEST_CASE("descent tables match frozen rows", "[permutations]") {
    const EulerianTable t22 = eulerian_rec(MultisetShape::parse("2,2"));
    CHECK(t22.at(1) == 1);
    CHECK(t22.at(2) == 2);
    CHECK(t22.at(0) == 0);
    CHECK(t22.at(3) == 0);

    const EulerianTable t222 = eulerian_rec(MultisetShape::parse("2,2,2"));
    CHECK(t222.at(1) == 1);
    CHECK(t222.at(2) == 8);
    CHECK(t222.at(3) == 6);

    const EulerianTable t111 = eulerian_rec(MultisetShape::parse("1,1,1"));
    CHECK(t111.at(1) == 1);
    CHECK(t111.at(2) == 4);
    CHECK(t111.at(3) == 1);

    const EulerianTable single = eulerian_rec(MultisetShape::parse("6"));
    CHECK(single.counts == std::vector<BigInt>{0, 1});

    const EulerianTable empty = eulerian_rec(MultisetShape{});
    CHECK(empty.counts == std::vector<BigInt>{1});
    CHECK(empty.at(0) == 1);
}

TEST_CASE("recurrence equals enumeration on small shapes", "[permutations]") {
    for (const char* text : {"", "1", "3", "2,2", "1,2,2", "2,1,2", "1,1,1,1", "2,3,1", "4,2"}) {
        const MultisetShape shape = MultisetShape::parse(text);
        CHECK(eulerian_rec(shape).counts == eulerian_brute(shape).counts);
    }
}

TEST_CASE("all-pairs rows give the second-order Eulerian triangle", "[permutations]") {
    for (int n = 1; n <= 6; ++n) {
        const MultisetShape shape{std::vector<int>(static_cast<size_t>(n), 2)};
        const EulerianTable table = eulerian_rec(shape);
        for (int i = 1; i <= n; ++i)
            CHECK(table.at(i) == oracles::second_order_eulerian(n, i - 1));
    }
}

TEST_CASE("enumeration budget in descent tables", "[permutations]") {
    const MultisetShape big{std::vector<int>(10, 2)};
    CHECK_THROWS_AS(eulerian_brute(big, 1000), budget_error);
}
