#include <doctest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <vector>

#include "known_values.hpp"
#include "rotgen/sequence.hpp"
#include "rotgen/successor.hpp"
#include "rotgen/verify.hpp"

using namespace rotgen;

namespace {

// Walk positions of every order-m permutation along the recycled cycle,
// indexed by rank: the brute-force ground truth the locator must match.
std::vector<std::int64_t> recycled_position_map(int m) {
    std::vector<std::int64_t> pos(factorial(m), -1);
    std::int64_t at = 0;
    walk_sequence(Permutation::descending(m), recycled_corbett(m).values, false,
                  [&](const Permutation& p) { pos[p.rank()] = at++; });
    return pos;
}

}  // namespace

TEST_SUITE("successor") {

TEST_CASE("run_lengths reads the descending prefix and ascending suffix") {
    const auto a = run_lengths(Permutation::parse("48756231"));
    CHECK(a.x == 2);
    CHECK(a.y == 1);

    const auto b = run_lengths(Permutation::parse("4321"));
    CHECK(b.x == 0);
    CHECK(b.y == 3);

    const auto c = run_lengths(Permutation::parse("45321"));
    CHECK(c.x == 1);
    CHECK(c.y == 3);

    CHECK(run_lengths(Permutation::parse("12")).x == 1);
    CHECK(run_lengths(Permutation::parse("12")).y == 0);
    CHECK(run_lengths(Permutation::parse("21")).x == 0);
    CHECK(run_lengths(Permutation::parse("21")).y == 1);
    CHECK_THROWS_AS(run_lengths(Permutation({1})), std::invalid_argument);
}

TEST_CASE("the suffix run must reach the symbol 1") {
    // 1432: window 4 3 2 ends in 2, so no suffix run counts.
    CHECK(run_lengths(Permutation::parse("1432")).y == 0);
    CHECK(run_lengths(Permutation::parse("4312")).y == 0);
    CHECK(run_lengths(Permutation::parse("2431")).y == 1);
}

TEST_CASE("corbett_successor applies y+2 or n-x") {
    const auto step1 = corbett_successor(Permutation::parse("48756231"));
    CHECK(step1.rotation == 3);
    CHECK(step1.next == Permutation::parse("87456231"));

    const auto step2 = corbett_successor(Permutation::parse("87456231"));
    CHECK(step2.rotation == 8);
    CHECK(step2.next == Permutation::parse("74562318"));

    const auto first = corbett_successor(Permutation::descending(4));
    CHECK(first.rotation == 4);
    CHECK(first.next == Permutation::parse("3214"));
}

TEST_CASE("iterating the successor reproduces the whole corbett cycle") {
    for (int n = 2; n <= 7; ++n) {
        Permutation cur = Permutation::descending(n);
        std::vector<int> rotations;
        rotations.reserve(factorial(n));
        for (std::uint64_t t = 0; t < factorial(n); ++t) {
            auto s = corbett_successor(cur);
            rotations.push_back(s.rotation);
            cur = std::move(s.next);
        }
        CHECK(rotations == corbett(n).values);
        CHECK(cur == Permutation::descending(n));
    }
}

TEST_CASE("locate_predecessor handles the trivial placements") {
    const auto first = locate_predecessor(Permutation::parse("54321"));
    CHECK(first.alpha == Permutation::parse("4321"));
    CHECK(first.ctx.chosen == LocatorCase::trivial_first);
    CHECK(first.ctx.block_entry == 0);
    CHECK(first.ctx.rotation == 4);

    const auto last = locate_predecessor(Permutation::parse("43215"));
    CHECK(last.alpha == Permutation::parse("4321"));
    CHECK(last.ctx.chosen == LocatorCase::trivial_last);
    CHECK(last.ctx.block_entry == 1);

    const auto second_last = locate_predecessor(Permutation::parse("43251"));
    CHECK(second_last.alpha == Permutation::parse("1432"));
    CHECK(second_last.ctx.chosen == LocatorCase::trivial_second_last);
    CHECK(second_last.ctx.block_entry == 2);
}

TEST_CASE("locate_predecessor picks the closed-form block owner") {
    const auto r = locate_predecessor(Permutation::parse("15423"));
    CHECK(r.alpha == Permutation::parse("3421"));
    CHECK(r.ctx.chosen == LocatorCase::b_tail);
    CHECK(r.ctx.rotation == 3);
    CHECK(r.ctx.block_entry == 4);
    CHECK(r.ctx.gamma == std::vector<int>{4, 2, 3, 1});
}

TEST_CASE("locate_predecessor agrees with the brute-force walk") {
    std::set<LocatorCase> seen_cases;
    for (int m = 5; m <= 6; ++m) {
        const auto pos = recycled_position_map(m);
        const auto owners = apply_sequence(Permutation::descending(m - 1),
                                           corbett(m - 1).values, false);
        std::vector<int> symbols(static_cast<std::size_t>(m));
        std::iota(symbols.begin(), symbols.end(), 1);
        do {
            const Permutation t(symbols);
            const auto r = locate_predecessor(t);
            seen_cases.insert(r.ctx.chosen);
            const std::int64_t at = pos[t.rank()];
            REQUIRE(at >= 0);
            CHECK(r.alpha == owners.items[static_cast<std::size_t>(at / m)]);
            CHECK(r.ctx.block_entry == static_cast<int>(at % m));
        } while (std::next_permutation(symbols.begin(), symbols.end()));
    }
    CHECK(seen_cases.size() == 6);
}

TEST_CASE("the part of t before its largest symbol is a suffix of alpha") {
    std::vector<int> symbols{1, 2, 3, 4, 5};
    do {
        const Permutation t(symbols);
        const auto r = locate_predecessor(t);
        const auto& ts = t.symbols();
        const auto& as = r.alpha.symbols();
        const auto cut = std::find(ts.begin(), ts.end(), 5);
        const auto lead = static_cast<std::size_t>(cut - ts.begin());
        CHECK(std::equal(ts.begin(), cut, as.end() - lead, as.end()));
    } while (std::next_permutation(symbols.begin(), symbols.end()));
}

TEST_CASE("locate_predecessor needs order at least 4") {
    CHECK_THROWS_AS(locate_predecessor(Permutation::parse("321")),
                    std::invalid_argument);
}

}  // TEST_SUITE
