#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "cpav/permutation.hpp"

using namespace cpav;

namespace {

Permutation perm(std::vector<int> v) { return Permutation(std::move(v)); }

CyclePermutation cyc(std::vector<std::vector<int>> cycles) { return CyclePermutation(std::move(cycles)); }

}  // namespace

TEST_CASE("reduce maps words to order-isomorphic permutations") {
    CHECK(reduce({2, 7, 5, 4}) == perm({1, 4, 3, 2}));
    CHECK(reduce({1, 2, 3}) == perm({1, 2, 3}));
    CHECK(reduce({9, 1, 10}) == perm({2, 1, 3}));
    CHECK(reduce(std::vector<int>{}) == Permutation());
    CHECK_THROWS_AS(reduce({3, 3, 1}), invalid_input);
}

TEST_CASE("permutation validation") {
    CHECK_THROWS_AS(perm({1, 1}), invalid_input);
    CHECK_THROWS_AS(perm({0, 1}), invalid_input);
    CHECK_THROWS_AS(perm({2, 3}), invalid_input);
    CHECK(Permutation().size() == 0);
}

TEST_CASE("match_count slides a window over sigma") {
    const Pattern tau1324 = parse_pattern("1324");
    CHECK(match_count(perm({1, 3, 2, 4}), tau1324) == 1);
    CHECK(match_count(perm({1, 2}), tau1324) == 0);
    CHECK(match_count(perm({1, 3, 2, 4, 6, 5, 7}), tau1324) == 2);
}

TEST_CASE("descent and left-to-right minimum counts") {
    const Permutation big({7, 10, 9, 11, 4, 8, 6, 1, 5, 3, 2});
    CHECK(descent_count(big) == 6);
    CHECK(lrmin_count(big) == 3);
    CHECK(descent_count(perm({1, 2, 3, 4, 5})) == 0);
    CHECK(descent_count(perm({1, 4, 3, 2})) == 2);
    CHECK(lrmin_count(perm({5, 4, 3, 2, 1})) == 5);
    CHECK(lrmin_count(perm({1, 2, 3, 4})) == 1);
    CHECK(descent_count(Permutation()) == 0);
    CHECK(lrmin_count(Permutation()) == 0);
    CHECK(descent_count(perm({1})) == 0);
}

TEST_CASE("to_cycles produces canonical cycle form") {
    CHECK(to_cycles(perm({1, 2, 3})) == cyc({{3}, {2}, {1}}));
    CHECK(to_cycles(perm({5, 1, 2, 4, 3})) == cyc({{4}, {1, 5, 3, 2}}));
    CHECK_THROWS_AS(cyc({{1, 5, 3, 2}, {4}}), invalid_input);   // minima must decrease
    CHECK_THROWS_AS(cyc({{4}, {5, 1, 3, 2}}), invalid_input);   // cycle must lead with min
    CHECK_THROWS_AS(cyc({{2}, {1, 4}}), invalid_input);         // must partition 1..n
}

TEST_CASE("flatten concatenates cycles") {
    CHECK(flatten(cyc({{7, 10, 9, 11}, {4, 8, 6}, {1, 5, 3, 2}})) ==
          perm({7, 10, 9, 11, 4, 8, 6, 1, 5, 3, 2}));
    CHECK(flatten(cyc({{1}})) == perm({1}));
    CHECK(flatten(cyc({{2, 3}, {1}})) == perm({2, 3, 1}));
}

TEST_CASE("cdes counts cyclic descents") {
    // the cycle (1,5,3,7,2) contributes 1 + des(1 5 3 7 2) = 3; singletons contribute 1
    CHECK(cdes(cyc({{6}, {4}, {1, 5, 3, 7, 2}})) == 1 + 1 + 3);
    CHECK(cdes(cyc({{1}})) == 1);
    CHECK(cdes(cyc({{7, 10, 9, 11}, {4, 8, 6}, {1, 5, 3, 2}})) == 7);
}

TEST_CASE("cycle_match_count scans cyclic windows") {
    const Pattern tau213 = parse_pattern("213");
    CHECK(cycle_match_count(cyc({{4, 7, 5, 8, 6}, {2, 3}, {1, 10, 9}}), tau213) == 3);
    CHECK(cycle_match_count(cyc({{3}, {2}, {1}}), tau213) == 0);
    CHECK(cycle_match_count(cyc({{1, 3, 2, 4}}), parse_pattern("1324")) == 1);
}

TEST_CASE("permutations_of yields each permutation once in rank order") {
    int count = 0;
    for (const auto& w : permutations_of(0)) {
        CHECK(w.empty());
        ++count;
    }
    CHECK(count == 1);

    count = 0;
    for ([[maybe_unused]] const auto& w : permutations_of(3)) ++count;
    CHECK(count == 6);

    std::set<std::vector<int>> all;
    for (const auto& w : PermutationRange(5, 0, 60)) all.insert(w);
    for (const auto& w : PermutationRange(5, 60, 120)) {
        CHECK(all.find(w) == all.end());
        all.insert(w);
    }
    CHECK(all.size() == 120);
}

TEST_CASE("rank round trip and lexicographic order") {
    std::uint64_t rank = 0;
    std::vector<int> prev;
    for (const auto& w : permutations_of(5)) {
        CHECK(PermutationRange::rank_of(w) == rank);
        CHECK(PermutationRange::unrank(5, rank) == w);
        if (rank > 0) CHECK(prev < w);
        prev = w;
        ++rank;
    }
    CHECK_THROWS_AS(PermutationRange(3, 4, 2), invalid_input);
    CHECK_THROWS_AS(PermutationRange(3, 0, 7), invalid_input);
}

TEST_CASE("cycle statistics match linear statistics under flattening") {
    const std::vector<Pattern> taus{parse_pattern("132"), parse_pattern("1324"), parse_pattern("1423")};
    for (int n = 0; n <= 7; ++n) {
        std::set<Permutation> images;
        for (const auto& w : permutations_of(n)) {
            const Permutation sigma(w);
            const CyclePermutation cycles = to_cycles(sigma);
            const Permutation flat = flatten(cycles);
            if (n >= 1) CHECK(cdes(cycles) == 1 + descent_count(flat));
            CHECK(cycles.cycle_count() == lrmin_count(flat));
            images.insert(flat);
            for (const Pattern& tau : taus)
                CHECK((cycle_match_count(cycles, tau) == 0) == (match_count(flat, tau) == 0));
        }
        CHECK(images.size() == static_cast<size_t>(factorial_u64(n)));  // flatten(to_cycles) is a bijection
    }
}

TEST_CASE("match_count is zero when sigma is shorter than tau") {
    const Pattern tau = parse_pattern("1,3,2,4,5,6,7,8,9,10");
    CHECK(tau.length() == 10);
    for (int n = 0; n <= 5; ++n)
        for (const auto& w : permutations_of(n)) CHECK(match_count(std::span<const int>(w), tau) == 0);
}

TEST_CASE("pattern parsing accepts digit and comma forms") {
    CHECK(parse_pattern("1324").perm() == perm({1, 3, 2, 4}));
    CHECK(parse_pattern("1,3,2,4").perm() == perm({1, 3, 2, 4}));
    CHECK(parse_pattern("1-3-2-4").perm() == perm({1, 3, 2, 4}));
    CHECK(parse_pattern("1,3,2,4,5,6,7,8,9,10").length() == 10);
    CHECK(parse_pattern("1324").descents() == 1);
    CHECK(parse_pattern("1324").canonical() == "1-3-2-4");
    CHECK_THROWS_AS(parse_pattern(""), invalid_input);
    CHECK_THROWS_AS(parse_pattern("1,,2"), invalid_input);
    CHECK_THROWS_AS(parse_pattern("10"), invalid_input);  // digit form: "1" then "0" is invalid
    CHECK_THROWS_AS(parse_pattern("122"), invalid_input);
}
