#include <doctest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "sumsetlab/minimal.hpp"
#include "test_helpers.hpp"

using namespace sumsetlab;

TEST_CASE("B-minimal elements of ({0,2,3}, {3})") {
    auto fam = b_minimal_elements(pset(1, {{0}, {2}, {3}}), pset(1, {{3}}), 50);
    CHECK(fam.complete);
    REQUIRE(fam.elements.size() == 3);
    CHECK(fam.elements[0].u == pt({0}));
    CHECK(fam.elements[1].u == pt({2}));
    CHECK(fam.elements[1].rep_length == 1);
    CHECK(fam.elements[2].u == pt({4}));  // 2+2 is the coset-1 minimal
    CHECK(fam.elements[2].rep_length == 2);
    CHECK(K_of(fam) == 2);
}

TEST_CASE("A = B* gives S = {0} and K = 0") {
    auto a = pset(2, {{0, 0}, {1, 0}, {0, 1}});
    auto fam = b_minimal_elements(a, pset(2, {{1, 0}, {0, 1}}), 20);
    CHECK(fam.complete);
    REQUIRE(fam.elements.size() == 1);
    CHECK(fam.elements[0].u == pt({0, 0}));
    CHECK(K_of(fam) == 0);
}

TEST_CASE("the non-simplex example has an infinite family") {
    // S(A,B) = {(-k, k) : k >= 0} here, so no layer ever closes
    auto a = pset(2, {{0, 0}, {-1, 1}, {0, 1}, {1, 0}});
    auto b = pset(2, {{0, 1}, {1, 0}});
    auto fam = b_minimal_elements(a, b, 12);
    CHECK_FALSE(fam.complete);
    for (int k = 0; k <= 12; ++k) CHECK(fam.contains(pt({-k, k})));
    CHECK_THROWS_AS(K_of(fam), UsageError);
}

TEST_CASE("translation lemma: S(b-A, b-B) mirrors S(A,B) and K is invariant") {
    // the avoid set B ∪ {0} translates as a whole: b - (B ∪ {0}) contains
    // both 0 and b, so the reflected basis argument is b - (B ∪ {0}) \ {0}
    auto run = [](const PointSet& a, const PointSet& b_set) {
        auto fam = b_minimal_elements(a, b_set, 64);
        REQUIRE(fam.complete);
        std::vector<Point> star(b_set.begin(), b_set.end());
        star.push_back(zero_point(a.dim()));
        for (const Point& b : b_set) {
            std::vector<Point> reflected;
            for (const Point& s : star)
                if (s != b) reflected.push_back(sub(b, s));
            auto mirrored =
                b_minimal_elements(reflect(b, a), PointSet(a.dim(), reflected), 64);
            REQUIRE(mirrored.complete);
            CHECK(K_of(mirrored) == K_of(fam));
            REQUIRE(mirrored.elements.size() == fam.elements.size());
            for (const auto& e : fam.elements) {
                Point v = sub(scale(Int(e.rep_length), b), e.u);
                CHECK(mirrored.contains(v));
                for (const auto& me : mirrored.elements)
                    if (me.u == v) CHECK(me.rep_length == e.rep_length);
            }
        }
    };
    run(pset(1, {{0}, {2}, {3}}), pset(1, {{3}}));
    run(pset(1, {{0}, {2}, {5}}), pset(1, {{5}}));
    run(pset(2, {{0, 0}, {2, 0}, {0, 3}, {1, 1}}), pset(2, {{2, 0}, {0, 3}}));
}

TEST_CASE("B-minimal decomposition reconstructs NA") {
    auto a = pset(1, {{0}, {2}, {3}});
    auto b_set = pset(1, {{3}});
    auto fam = b_minimal_elements(a, b_set, 50);
    REQUIRE(fam.complete);
    auto bstar = pset(1, {{0}, {3}});
    for (int n = 1; n <= 7; ++n) {
        std::set<Point> rebuilt;
        for (const auto& e : fam.elements) {
            if (e.rep_length > n) continue;
            if (e.rep_length == n) {
                rebuilt.insert(e.u);
                continue;
            }
            for (const Point& w : sumset(bstar, n - e.rep_length))
                rebuilt.insert(add(e.u, w));
        }
        CHECK(PointSet(1, {rebuilt.begin(), rebuilt.end()}) == sumset(a, n));
    }
}

TEST_CASE("Davenport constants of small groups") {
    CHECK(davenport_constant(group_from_invariants({})) == 1);
    CHECK(davenport_constant(group_from_invariants({Int(2), Int(2)})) == 3);
    for (long long n = 2; n <= 12; ++n)
        CHECK(davenport_constant(group_from_invariants({Int(n)})) == n);
    // independent naive search on tiny cyclic groups
    for (unsigned n = 2; n <= 7; ++n) {
        std::vector<std::vector<unsigned>> add(n, std::vector<unsigned>(n));
        for (unsigned i = 0; i < n; ++i)
            for (unsigned j = 0; j < n; ++j) add[i][j] = (i + j) % n;
        CHECK(davenport_constant(group_from_invariants({Int(n)})) ==
              1 + oracles::naive_zero_sum_free(n, add));
    }
    CHECK(davenport_constant(group_from_invariants({Int(2), Int(4)})) == 5);  // m + n - 1
}

TEST_CASE("Davenport beyond the search budget raises with the bound in the message") {
    auto g = group_from_invariants({Int(101)});
    CHECK_THROWS_AS(davenport_constant(g), BudgetError);
    try {
        davenport_constant(g);
    } catch (const BudgetError& e) {
        CHECK(std::string(e.what()).find("m(1+log|G|/m)") != std::string::npos);
    }
}

TEST_CASE("k(G,H) basics and bounds") {
    CHECK(k_constant(group_from_invariants({Int(2)}), {{Int(1)}}) == 1);
    int k6 = k_constant(group_from_invariants({Int(6)}), {{Int(1)}});
    auto g6 = group_from_invariants({Int(6)});
    CHECK(k6 <= 6 - 1);                       // |G| - |H|
    CHECK(k6 < davenport_constant(g6));       // k < D(G)
    CHECK(k6 == 5);                           // frozen from the exhaustive search
    CHECK_THROWS_AS(k_constant(g6, {{Int(0)}}), UsageError);
    // the m(1+log|G|/m) - 1 form
    double m = 6.0, order = 6.0;
    CHECK(static_cast<double>(k6) <= m * (1.0 + std::log(order) / m) - 1.0);
}

TEST_CASE("k(G,H) <= |G| - |H| on random subsets") {
    std::mt19937 rng(23);
    for (int trial = 0; trial < 20; ++trial) {
        long long n = 4 + static_cast<long long>(rng() % 9);
        auto g = group_from_invariants({Int(n)});
        std::vector<std::vector<Int>> h;
        std::set<long long> used;
        int hsize = 1 + static_cast<int>(rng() % 3);
        while (static_cast<int>(used.size()) < hsize) {
            long long e = 1 + static_cast<long long>(rng() % (n - 1));
            if (used.insert(e).second) h.push_back({Int(e)});
        }
        int k = k_constant(g, h);
        CHECK(k <= static_cast<int>(n) - static_cast<int>(h.size()));
        CHECK(k < davenport_constant(g));
    }
}

TEST_CASE("minimally useless vectors") {
    auto none = minimal_useless(pset(1, {{0}, {1}}), 4);
    CHECK(none.members.empty());
    CHECK(none.certified);

    auto fam = minimal_useless(pset(1, {{0}, {1}, {2}}), 3);
    REQUIRE(fam.members.size() == 1);
    CHECK(fam.members[0].exponents == std::vector<Int>{1, 0, 1});
    CHECK(fam.members[0].witness == std::vector<Int>{0, 2, 0});
    CHECK(fam.certified);
}

TEST_CASE("useless members carry genuine witnesses and form an antichain") {
    for (auto a : {pset(1, {{0}, {2}, {3}}), pset(1, {{0}, {2}, {5}}),
                   pset(2, {{0, 0}, {1, 0}, {0, 1}, {1, 1}})}) {
        auto fam = minimal_useless(a, 4);
        const auto& pts = a.points();
        for (const auto& mem : fam.members) {
            // witness: lex-smaller, same l1 norm, same weighted sum
            CHECK(mem.witness < mem.exponents);
            Int n1 = 0, n2 = 0;
            Point v1 = zero_point(a.dim()), v2 = zero_point(a.dim());
            for (std::size_t j = 0; j < pts.size(); ++j) {
                n1 += mem.exponents[j];
                n2 += mem.witness[j];
                v1 = add(v1, scale(mem.exponents[j], pts[j]));
                v2 = add(v2, scale(mem.witness[j], pts[j]));
            }
            CHECK(n1 == n2);
            CHECK(v1 == v2);
        }
        for (std::size_t i = 0; i < fam.members.size(); ++i)
            for (std::size_t j = 0; j < fam.members.size(); ++j) {
                if (i == j) continue;
                bool le = true;
                for (std::size_t t = 0; t < pts.size(); ++t)
                    le = le && fam.members[i].exponents[t] <= fam.members[j].exponents[t];
                CHECK_FALSE(le);  // antichain under <=_unif
            }
    }
}

TEST_CASE("removing any useless member breaks the count on the window") {
    auto a = pset(1, {{0}, {2}, {3}});
    auto fam = minimal_useless(a, 5);
    REQUIRE(fam.certified);
    REQUIRE(!fam.members.empty());
    auto t = growth_table(a, 20);
    for (std::size_t drop = 0; drop < fam.members.size(); ++drop) {
        UselessFamily smaller = fam;
        smaller.members.erase(smaller.members.begin() + static_cast<long>(drop));
        bool differs = false;
        for (int n = 10; n <= 20 && !differs; ++n)
            differs = useless_count_at(smaller, n) != t.size_at(n);
        CHECK(differs);
    }
}

TEST_CASE("the inclusion-exclusion count reproduces |NA| everywhere once certified") {
    for (auto a : {pset(1, {{0}, {1}, {2}}), pset(1, {{0}, {2}, {3}}), pset(1, {{0}, {2}, {5}})}) {
        auto fam = minimal_useless(a, 6);
        REQUIRE(fam.certified);
        auto t = growth_table(a, 15);
        for (int n = 1; n <= 15; ++n) CHECK(useless_count_at(fam, n) == t.size_at(n));
    }
}
