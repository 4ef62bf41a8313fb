#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "sumsetlab/lattice.hpp"
#include "test_helpers.hpp"

using namespace sumsetlab;

TEST_CASE("hermite normal form of canonical bases") {
    auto l = hermite_normal_form({pt({1, 0}), pt({0, 1})});
    CHECK(l.rank() == 2);
    CHECK(l.basis() == std::vector<Point>{pt({1, 0}), pt({0, 1})});

    auto l2 = hermite_normal_form({pt({2, 0}), pt({0, 3})});
    CHECK(l2.basis() == std::vector<Point>{pt({2, 0}), pt({0, 3})});
}

TEST_CASE("hermite normal form closes {(1,1),(2,0),(0,3)} to Z^2") {
    std::vector<Point> gens{pt({1, 1}), pt({2, 0}), pt({0, 3})};
    auto l = hermite_normal_form(gens);
    CHECK(l.rank() == 2);
    CHECK(l.basis() == std::vector<Point>{pt({1, 0}), pt({0, 1})});
    // oracle: membership agrees with brute-force integer combinations on a grid
    for (long long x = -2; x <= 2; ++x)
        for (long long y = -2; y <= 2; ++y) {
            bool brute = oracles::brute_span_contains(gens, pt({x, y}), 4);
            CHECK(l.contains(pt({x, y})) == brute);
        }
}

TEST_CASE("generators live inside their own HNF lattice") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> coord(-4, 4);
    for (int trial = 0; trial < 30; ++trial) {
        std::vector<Point> gens;
        for (int i = 0; i < 3; ++i) gens.push_back(pt({coord(rng), coord(rng), coord(rng)}));
        bool any_nonzero = false;
        for (auto& g : gens) any_nonzero = any_nonzero || !is_zero(g);
        if (!any_nonzero) continue;
        auto l = hermite_normal_form(gens);
        for (const auto& g : gens) CHECK(l.contains(g));
        // basis rows are integer combinations of the generators: adjoining
        // them must not enlarge the lattice
        std::vector<Point> enlarged = gens;
        for (const auto& b : l.basis()) enlarged.push_back(b);
        CHECK(hermite_normal_form(enlarged, 3).basis() == l.basis());
    }
}

TEST_CASE("empty generator list needs an ambient dimension") {
    CHECK_THROWS_AS(hermite_normal_form({}), UsageError);
    auto l = hermite_normal_form({}, 3);
    CHECK(l.rank() == 0);
    CHECK(l.ambient_dim() == 3);
}

TEST_CASE("lattice membership in 1-d") {
    auto l = hermite_normal_form({pt({2})});
    CHECK(l.contains(pt({4})));
    CHECK_FALSE(l.contains(pt({3})));
    auto l2 = hermite_normal_form({pt({2, 0}), pt({0, 3})});
    CHECK(l2.contains(pt({2, 3})));
}

TEST_CASE("quotient Z^2 / <(2,0),(0,3)> is cyclic of order 6") {
    auto sup = hermite_normal_form({pt({1, 0}), pt({0, 1})});
    auto sub = hermite_normal_form({pt({2, 0}), pt({0, 3})});
    auto g = quotient_group(sup, sub);
    CHECK(g.order() == 6);
    CHECK(g.invariant_factors() == std::vector<Int>{Int(6)});
    // oracle: number of cosets in the fundamental box
    std::set<unsigned long long> classes;
    for (long long x = 0; x < 6; ++x)
        for (long long y = 0; y < 6; ++y) classes.insert(g.index_of(g.project(pt({x, y}))));
    CHECK(classes.size() == 6);
}

TEST_CASE("quotient Z^2 / <(2,0),(0,2)> is (Z/2)^2; L/L is trivial") {
    auto sup = hermite_normal_form({pt({1, 0}), pt({0, 1})});
    auto sub = hermite_normal_form({pt({2, 0}), pt({0, 2})});
    auto g = quotient_group(sup, sub);
    CHECK(g.invariant_factors() == std::vector<Int>{Int(2), Int(2)});
    auto trivial = quotient_group(sub, sub);
    CHECK(trivial.order() == 1);
    CHECK(trivial.invariant_factors().empty());
}

TEST_CASE("quotient errors: non-sublattice and rank mismatch") {
    auto sup = hermite_normal_form({pt({2, 0}), pt({0, 2})});
    auto not_sub = hermite_normal_form({pt({1, 0}), pt({0, 1})});
    CHECK_THROWS_AS(quotient_group(sup, not_sub), UsageError);
    auto low_rank = hermite_normal_form({pt({2, 0})});
    CHECK_THROWS_AS(quotient_group(sup, low_rank), UsageError);
}

TEST_CASE("quotient order equals the determinant ratio") {
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> coord(-3, 3);
    std::uniform_int_distribution<int> small(1, 3);
    int done = 0;
    while (done < 20) {
        Point r1 = pt({coord(rng), coord(rng)});
        Point r2 = pt({coord(rng), coord(rng)});
        auto sup = hermite_normal_form({r1, r2}, 2);
        if (sup.rank() != 2) continue;
        // a random finite-index sublattice: integer multiples of the rows
        Int m1 = small(rng), m2 = small(rng);
        auto sub = hermite_normal_form({scale(m1, sup.basis()[0]), scale(m2, sup.basis()[1])}, 2);
        auto g = quotient_group(sup, sub);
        CHECK(g.order() == abs_int(sub.pivot_product() / sup.pivot_product()));
        ++done;
    }
}

TEST_CASE("projection is additive") {
    std::mt19937 rng(13);
    std::uniform_int_distribution<int> coord(-6, 6);
    auto sup = hermite_normal_form({pt({1, 0}), pt({0, 1})});
    auto sub = hermite_normal_form({pt({3, 1}), pt({0, 4})});
    auto g = quotient_group(sup, sub);
    for (int i = 0; i < 50; ++i) {
        Point v = pt({coord(rng), coord(rng)});
        Point w = pt({coord(rng), coord(rng)});
        auto pv = g.project(v);
        auto pw = g.project(w);
        auto pvw = g.project(add(v, w));
        CHECK(g.index_of(pvw) == g.add_indices(g.index_of(pv), g.index_of(pw)));
    }
    // kernel of the projection is exactly the sublattice
    for (int x = -4; x <= 4; ++x)
        for (int y = -4; y <= 4; ++y) {
            Point v = pt({x, y});
            bool zero = g.index_of(g.project(v)) == 0;
            CHECK(zero == sub.contains(v));
        }
}
