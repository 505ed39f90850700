#include <doctest.h>

#include <random>
#include <stdexcept>
#include <vector>

#include "known_values.hpp"
#include "rotgen/verify.hpp"

using namespace rotgen;

TEST_SUITE("verify") {

TEST_CASE("check_hamilton confirms the tiny cycles") {
    const auto two = check_hamilton(make_sequence({2, 2}, 2), 2);
    CHECK(two.hamiltonian);
    CHECK(two.total_visited == 2);
    CHECK(two.distinct_visited == 2);
    CHECK(two.cyclic);
    CHECK(two.alphabet == GeneratorSet{2});

    const auto three = check_hamilton(make_sequence(known::corbett3, 3), 3);
    CHECK(three.hamiltonian);
    CHECK(three.alphabet == GeneratorSet{2, 3});
    CHECK_FALSE(three.first_duplicate.has_value());
}

TEST_CASE("a short closed walk is cyclic but not hamiltonian") {
    const auto r = check_hamilton(make_sequence({2, 2}, 3), 3);
    CHECK_FALSE(r.hamiltonian);
    CHECK(r.cyclic);
    CHECK(r.total_visited == 2);
    CHECK(r.distinct_visited == 2);
    CHECK_FALSE(r.first_duplicate.has_value());
}

TEST_CASE("check_hamilton reports the first revisit") {
    const auto r = check_hamilton(staircase(4), 4);
    CHECK_FALSE(r.hamiltonian);
    CHECK_FALSE(r.cyclic);
    CHECK(r.total_visited == 24);
    CHECK(r.distinct_visited == 16);
    REQUIRE(r.first_duplicate.has_value());
    CHECK(r.first_duplicate->perm == Permutation::parse("4321"));
    CHECK(r.first_duplicate->first_index == 0);
    CHECK(r.first_duplicate->second_index == 8);
}

TEST_CASE("check_hamilton accepts any start of matching order") {
    const auto r = check_hamilton(corbett(4), 4, Permutation::parse("1234"));
    CHECK(r.hamiltonian);
    CHECK_THROWS_AS(check_hamilton(corbett(4), 4, Permutation::parse("123")),
                    std::invalid_argument);
}

TEST_CASE("check_hamilton guards its domain") {
    CHECK_THROWS_AS(check_hamilton(make_sequence({5, 5}, 5), 4),
                    std::invalid_argument);
    CHECK_THROWS_AS(check_hamilton(make_sequence({2, 2}, 2), 0),
                    std::invalid_argument);
    CHECK_THROWS_AS(check_hamilton(make_sequence({2, 2}, 2), 11),
                    std::length_error);
}

TEST_CASE("the three families audit hamiltonian at small orders") {
    for (int n = 2; n <= 6; ++n) {
        CHECK(check_hamilton(corbett(n), n).hamiltonian);
        if (n >= 3) CHECK(check_hamilton(recycled_corbett(n), n).hamiltonian);
        if (n >= 4) CHECK(check_hamilton(reuse_recycled_corbett(n), n).hamiltonian);
    }
}

TEST_CASE("the quotient lemmas hold on the base tables") {
    CHECK(check_lemma1(make_sequence(known::corbett3, 3), 4));
    CHECK(check_lemma2(make_sequence(known::corbett3, 3), 4));
    CHECK(check_lemma1(make_sequence({}, 3), 4));
    CHECK(check_lemma2(make_sequence({}, 3), 4));
    CHECK_THROWS_AS(check_lemma1(make_sequence({2}, 2), 2), std::invalid_argument);
}

TEST_CASE("the quotient lemmas hold on random sequences") {
    std::mt19937 rng(0x5eed);
    for (int n = 4; n <= 7; ++n) {
        std::uniform_int_distribution<int> pick(2, n - 1);
        std::uniform_int_distribution<int> len(0, 40);
        for (int trial = 0; trial < 25; ++trial) {
            std::vector<int> vals(static_cast<std::size_t>(len(rng)));
            for (int& v : vals) v = pick(rng);
            const auto s = make_sequence(vals, n - 1);
            CHECK(check_lemma1(s, n));
            CHECK(check_lemma2(s, n));
        }
    }
}

TEST_CASE("the rotation identities hold") {
    for (int n = 3; n <= 6; ++n) CHECK(check_identities(n));
    CHECK(check_identities(8));
    CHECK_THROWS_AS(check_identities(2), std::invalid_argument);
}

TEST_CASE("recycle does not preserve Hamiltonicity in general") {
    const auto demo = counterexample_demo();
    CHECK(demo.base.values == known::fragile4);
    CHECK(demo.base_report.hamiltonian);
    CHECK_FALSE(demo.recycle5_report.hamiltonian);
    CHECK(demo.recycle5_report.cyclic);  // closed walk, just not simple
    REQUIRE(demo.recycle5_report.first_duplicate.has_value());
    CHECK(demo.recycle5_report.first_duplicate->perm == Permutation::parse("15324"));
    CHECK(demo.recycle5_report.first_duplicate->first_index == 4);
    CHECK(demo.recycle5_report.first_duplicate->second_index == 34);
    CHECK(demo.witness_positions == std::vector<std::int64_t>{19, 109});
    CHECK_FALSE(demo.reuse5_recycle6_report.hamiltonian);
    CHECK(demo.reproduced());
}

TEST_CASE("sp_cycle emits the circular shorthand-prefix string") {
    CHECK(sp_cycle(3) == std::vector<int>{3, 2, 1, 3, 1, 2});
    CHECK(sp_cycle(4) == known::sp4);
    CHECK(sp_cycle(5).size() == 120);
    CHECK_THROWS_AS(sp_cycle(2), std::invalid_argument);
    CHECK_THROWS_AS(sp_cycle(11), std::length_error);
}

TEST_CASE("sp_cycle matches the first symbols of the recycled Gray code") {
    for (std::size_t t = 0; t < known::sp4.size(); ++t)
        CHECK(known::sp4[t] == known::recycled4_code[t][0] - '0');
}

}  // TEST_SUITE
