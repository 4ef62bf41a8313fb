#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "sumsetlab/sumset.hpp"
#include "test_helpers.hpp"

using namespace sumsetlab;

TEST_CASE("sumset basics") {
    CHECK(sumset(pset(1, {{0}, {1}}), 3) == pset(1, {{0}, {1}, {2}, {3}}));
    auto s = sumset(pset(1, {{0}, {2}, {3}}), 3);
    CHECK(s == pset(1, {{0}, {2}, {3}, {4}, {5}, {6}, {7}, {8}, {9}}));
    CHECK(s.size() == 9);
    CHECK(sumset(pset(2, {{0, 0}, {1, 0}, {0, 1}}), 2).size() == 6);
}

TEST_CASE("sumset agrees with the tuple-enumeration oracle") {
    std::mt19937 rng(17);
    std::uniform_int_distribution<int> coord(-3, 3);
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<Point> pts;
        for (int i = 0; i < 4; ++i) pts.push_back(pt({coord(rng), coord(rng)}));
        PointSet a(2, pts);
        for (int n = 1; n <= 4; ++n) CHECK(sumset(a, n) == oracles::brute_sumset(a, n));
    }
}

TEST_CASE("growth tables") {
    auto t = growth_table(pset(1, {{0}, {2}, {5}}), 4);
    CHECK(t.sizes == std::vector<Int>{3, 6, 10, 15});
    CHECK(growth_table(pset(1, {{0}, {1}}), 3).sizes == std::vector<Int>{2, 3, 4});
    CHECK(growth_table(pset(1, {{0}, {2}, {3}}), 3).sizes == std::vector<Int>{3, 6, 9});
}

TEST_CASE("growth is nondecreasing when 0 is in A") {
    std::mt19937 rng(19);
    std::uniform_int_distribution<int> coord(0, 4);
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<Point> pts{pt({0, 0})};
        for (int i = 0; i < 3; ++i) pts.push_back(pt({coord(rng), coord(rng)}));
        auto t = growth_table(PointSet(2, pts), 5);
        for (std::size_t i = 1; i < t.sizes.size(); ++i) CHECK(t.sizes[i] >= t.sizes[i - 1]);
    }
}

TEST_CASE("nesting: NA is contained in (N+1)A when 0 is in A") {
    auto a = pset(2, {{0, 0}, {2, 1}, {1, 3}});
    PointSet prev = sumset(a, 1);
    for (int n = 2; n <= 5; ++n) {
        PointSet next = sumset(a, n);
        CHECK(prev.subset_of(next));
        prev = next;
    }
}

TEST_CASE("budget errors carry the completed prefix") {
    EnumerationBudget tiny;
    tiny.max_points = 12;
    auto a = pset(1, {{0}, {2}, {5}});
    CHECK_THROWS_AS(sumset(a, 5, tiny), BudgetError);
    try {
        growth_table(a, 6, tiny);
        FAIL("expected PartialTableError");
    } catch (const PartialTableError& e) {
        CHECK(e.prefix == std::vector<Int>{3, 6});
    }
}

TEST_CASE("minimal representation lengths") {
    auto a = pset(1, {{0}, {2}, {3}});
    CHECK(*min_rep_length(a, pt({7}), 10) == 3);  // 7 = 2+2+3
    CHECK(*min_rep_length(a, pt({0}), 10) == 0);
    CHECK_FALSE(min_rep_length(a, pt({1}), 10).has_value());
    // N = N_A(v) means v in NA but not in (N-1)A
    for (long long v = 2; v <= 12; ++v) {
        auto n = min_rep_length(a, pt({v}), 12);
        REQUIRE(n.has_value());
        CHECK(sumset(a, *n).contains(pt({v})));
        if (*n > 1) CHECK_FALSE(sumset(a, *n - 1).contains(pt({v})));
    }
}

TEST_CASE("P(A) membership for numerical semigroups") {
    auto a = pset(1, {{0}, {2}, {3}});
    CHECK_FALSE(psa_membership(a, pt({1})));
    CHECK(psa_membership(a, pt({5})));
    CHECK(psa_membership(pset(2, {{0, 0}, {1, 0}, {0, 1}}), pt({4, 7})));
    // oracle: the sieve over <2,5>
    auto a25 = pset(1, {{0}, {2}, {5}});
    auto reach = oracles::semigroup_sieve({2, 5}, 30);
    for (long long v = 0; v <= 30; ++v)
        CHECK(psa_membership(a25, pt({v})) == reach[static_cast<std::size_t>(v)]);
}

TEST_CASE("psa_membership demands an extremal origin") {
    CHECK_THROWS_AS(psa_membership(pset(1, {{-1}, {0}, {1}}), pt({1})), UsageError);
    CHECK_THROWS_AS(psa_membership(pset(1, {{2}, {3}}), pt({5})), UsageError);  // 0 not in A
}

TEST_CASE("exceptional sets of numerical semigroups") {
    auto region = convex_hull(pset(1, {{0}, {20}}));
    CHECK(exceptional_set(pset(1, {{0}, {2}, {3}}), region) == pset(1, {{1}}));
    CHECK(exceptional_set(pset(1, {{0}, {2}, {5}}), region) == pset(1, {{1}, {3}}));
    // simplex vertex sets generating their lattice have no exceptional points
    auto simplex = pset(2, {{0, 0}, {1, 0}, {0, 1}});
    auto region2 = convex_hull(pset(2, {{0, 0}, {9, 0}, {0, 9}, {9, 9}}));
    CHECK(exceptional_set(simplex, region2).empty());
}

TEST_CASE("exceptional sets are consistent across nested regions") {
    auto a = pset(1, {{0}, {4}, {7}});
    auto small = exceptional_set(a, convex_hull(pset(1, {{0}, {12}})));
    auto large = exceptional_set(a, convex_hull(pset(1, {{0}, {40}})));
    for (const Point& p : small) CHECK(large.contains(p));
    for (const Point& p : large)
        if (p[0] <= 12) CHECK(small.contains(p));
}

TEST_CASE("width") {
    CHECK(width(pset(1, {{0}, {2}, {5}})) == 5);
    CHECK(width(pset(2, {{0, 0}, {1, 1}, {2, 0}, {0, 3}})) == 3);
    CHECK(width(pset(1, {{7}})) == 0);
}
