#include <doctest.h>

#include <random>
#include <stdexcept>

#include "known_values.hpp"
#include "rotgen/sequence.hpp"

using namespace rotgen;

TEST_SUITE("sequence") {

TEST_CASE("make_sequence validates values against the ambient order") {
    const auto s = make_sequence({2, 3, 2}, 3);
    CHECK(s.size() == 3);
    CHECK(s.order_n == 3);
    CHECK(make_sequence({}, 5).size() == 0);
    CHECK_THROWS_AS(make_sequence({1}, 3), std::invalid_argument);
    CHECK_THROWS_AS(make_sequence({4}, 3), std::invalid_argument);
    CHECK_THROWS_AS(make_sequence({2}, 1), std::invalid_argument);
}

TEST_CASE("reuse expands i into n-1 copies of n then n-i+1") {
    const auto out = reuse(make_sequence({3}, 5), 6);
    CHECK(out.order_n == 6);
    CHECK(out.values == std::vector<int>{6, 6, 6, 6, 6, 4});
}

TEST_CASE("recycle expands i into n n, i-1 copies of n-1, n-i-1 copies of n") {
    const auto out = recycle(make_sequence({3}, 5), 6);
    CHECK(out.values == std::vector<int>{6, 6, 5, 5, 6, 6});
    // Every block leads with two copies of n.
    const auto lifted = recycle(make_sequence({4, 2, 3}, 5), 6);
    REQUIRE(lifted.size() == 18);
    for (std::size_t b = 0; b < 3; ++b) {
        CHECK(lifted.values[6 * b] == 6);
        CHECK(lifted.values[6 * b + 1] == 6);
    }
}

TEST_CASE("step expands i into n-1 copies of n then i") {
    const auto out = step(make_sequence({3}, 5), 6);
    CHECK(out.values == std::vector<int>{6, 6, 6, 6, 6, 3});
}

TEST_CASE("blockwise operators demand 1 < i < n") {
    CHECK_THROWS_AS(reuse(make_sequence({5}, 5), 5), std::invalid_argument);
    CHECK_THROWS_AS(recycle(make_sequence({2, 4}, 4), 4), std::invalid_argument);
    CHECK_THROWS_AS(step(make_sequence({2}, 2), 2), std::invalid_argument);
}

TEST_CASE("blockwise output length is n times the input length") {
    std::mt19937 rng(0x5eed);
    for (int n = 4; n <= 8; ++n) {
        std::uniform_int_distribution<int> pick(2, n - 1);
        std::vector<int> vals(20);
        for (int& v : vals) v = pick(rng);
        const auto s = make_sequence(vals, n - 1);
        CHECK(reuse(s, n).size() == 20u * static_cast<std::size_t>(n));
        CHECK(recycle(s, n).size() == 20u * static_cast<std::size_t>(n));
        CHECK(step(s, n).size() == 20u * static_cast<std::size_t>(n));
    }
}

TEST_CASE("blockwise operators map alphabets predictably") {
    std::mt19937 rng(0xfeed);
    for (int n = 4; n <= 8; ++n) {
        std::uniform_int_distribution<int> pick(2, n - 1);
        std::vector<int> vals(30);
        for (int& v : vals) v = pick(rng);
        const auto s = make_sequence(vals, n - 1);

        GeneratorSet reuse_want{n};
        for (int i : alphabet(s)) reuse_want.insert(n - i + 1);
        CHECK(alphabet(reuse(s, n)) == reuse_want);

        const auto rec = alphabet(recycle(s, n));
        CHECK(rec.count(n) == 1);
        for (int v : rec) CHECK((v == n || v == n - 1));

        GeneratorSet step_want = alphabet(s);
        step_want.insert(n);
        CHECK(alphabet(step(s, n)) == step_want);
    }
}

TEST_CASE("corbett matches the known tables") {
    CHECK(corbett(2).values == std::vector<int>{2, 2});
    CHECK(corbett(3).values == known::corbett3);
    CHECK(corbett(4).values == known::corbett4);
    CHECK(corbett(4).order_n == 4);
}

TEST_CASE("staircase matches the known table and agrees with corbett at order 3") {
    CHECK(staircase(2).values == std::vector<int>{2, 2});
    CHECK(staircase(3).values == corbett(3).values);
    CHECK(staircase(4).values == known::staircase4);
}

TEST_CASE("recycled_corbett matches the known table") {
    CHECK(recycled_corbett(3).values == std::vector<int>{3, 3, 2, 3, 3, 2});
    CHECK(recycled_corbett(4).values == known::recycled4);
}

TEST_CASE("reuse_recycled_corbett lifts the recycled family") {
    // recycled_corbett(3) equals corbett(3), so the order-4 lifts coincide.
    CHECK(reuse_recycled_corbett(4).values == corbett(4).values);
    const auto s = reuse_recycled_corbett(5);
    REQUIRE(s.size() == 120);
    const std::vector<int> head{5, 5, 5, 5, 2, 5, 5, 5, 5, 2,
                                5, 5, 5, 5, 3, 5, 5, 5, 5, 3};
    CHECK(std::vector<int>(s.values.begin(), s.values.begin() + 20) == head);
}

TEST_CASE("builders produce n! values") {
    for (int n = 2; n <= 8; ++n) {
        CHECK(corbett(n).size() == factorial(n));
        CHECK(staircase(n).size() == factorial(n));
        if (n >= 3) CHECK(recycled_corbett(n).size() == factorial(n));
        if (n >= 4) CHECK(reuse_recycled_corbett(n).size() == factorial(n));
    }
}

TEST_CASE("builder alphabets are the advertised generator sets") {
    for (int n = 3; n <= 8; ++n) {
        GeneratorSet full;
        for (int v = 2; v <= n; ++v) full.insert(v);
        CHECK(alphabet(corbett(n)) == full);
        CHECK(alphabet(recycled_corbett(n)) == GeneratorSet{n - 1, n});
        if (n >= 5) CHECK(alphabet(reuse_recycled_corbett(n)) == GeneratorSet{2, 3, n});
    }
}

TEST_CASE("builders reject orders below their base case") {
    CHECK_THROWS_AS(corbett(1), std::invalid_argument);
    CHECK_THROWS_AS(staircase(1), std::invalid_argument);
    CHECK_THROWS_AS(recycled_corbett(2), std::invalid_argument);
    CHECK_THROWS_AS(reuse_recycled_corbett(3), std::invalid_argument);
}

TEST_CASE("builders refuse to materialize past the cap") {
    CHECK_THROWS_AS(corbett(13), std::length_error);
    CHECK_THROWS_AS(staircase(13), std::length_error);
    CHECK_THROWS_AS(recycled_corbett(13), std::length_error);
    CHECK_THROWS_AS(reuse_recycled_corbett(13), std::length_error);
    CHECK_THROWS_AS(corbett(6, 5), std::length_error);
    CHECK(corbett(6, 6).size() == 720);
}

TEST_CASE("factorial covers 0..20") {
    CHECK(factorial(0) == 1);
    CHECK(factorial(1) == 1);
    CHECK(factorial(5) == 120);
    CHECK(factorial(20) == 2432902008176640000ull);
    CHECK_THROWS_AS(factorial(21), std::invalid_argument);
    CHECK_THROWS_AS(factorial(-1), std::invalid_argument);
}

}  // TEST_SUITE
