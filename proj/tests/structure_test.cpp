#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "sumsetlab/structure.hpp"
#include "test_helpers.hpp"

using namespace sumsetlab;

TEST_CASE("rhs of the structure identity on small 1-d sets") {
    // {0,2,3} at N = 3: base {0..9} minus translated gap sets
    auto rhs = rhs_structure_set(pset(1, {{0}, {2}, {3}}), 3);
    CHECK(rhs.size() == 9);
    CHECK(rhs == sumset(pset(1, {{0}, {2}, {3}}), 3));

    CHECK(rhs_structure_set(pset(1, {{0}, {1}}), 1) == pset(1, {{0}, {1}}));
}

TEST_CASE("simplex vertex sets: the rhs is every lattice point of N H(A)") {
    auto a = pset(2, {{0, 0}, {2, 1}, {1, 3}});
    auto hull = convex_hull(a);
    auto lam = difference_lattice(a);
    for (int n : {1, 3, 5}) {
        auto rhs = rhs_structure_set(a, n);
        auto all = polytope_lattice_points(hull, Int(n), lam, scale(Int(n), a[0]));
        CHECK(rhs == all);
        CHECK(verify_structure(a, n).equal);
    }
}

TEST_CASE("verify_structure across a window") {
    // |A| = d+2 with simplex hull: identity holds for every N >= 1
    auto cg = pset(2, {{0, 0}, {1, 1}, {2, 0}, {0, 3}});
    for (int n = 1; n <= 8; ++n) {
        auto v = verify_structure(cg, n);
        CHECK(v.equal);
        CHECK(v.lhs_subset_of_rhs);
        CHECK_FALSE(v.witness.has_value());
    }
    CHECK(verify_structure(pset(1, {{0}, {2}, {5}}), 1).equal);
    CHECK(verify_structure(pset(2, {{0, 0}, {1, 0}, {0, 1}}), 7).equal);
}

TEST_CASE("empirical structure onset") {
    auto r = empirical_structure_onset(pset(1, {{0}, {2}, {5}}), 6);
    CHECK(r.empirical_onset == 1);
    CHECK(r.horizon == 6);
    auto r2 = empirical_structure_onset(pset(1, {{0}, {3}, {7}}), 6);
    CHECK(r2.empirical_onset == 1);  // N_Str = 1 for coprime triples
    auto r3 = empirical_structure_onset(pset(3, {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}}), 5);
    CHECK(r3.empirical_onset == 1);  // |A| = d+1 simplex
}

TEST_CASE("the left side is always contained in the right side") {
    std::mt19937 rng(31);
    std::uniform_int_distribution<int> coord(-2, 3);
    // fixed corpus including non-simplex shapes, plus random sets
    std::vector<PointSet> corpus = {
        pset(2, {{0, 0}, {1, 0}, {0, 1}, {1, 1}}),
        pset(2, {{0, 0}, {-1, 1}, {0, 1}, {1, 0}}),
        pset(2, {{0, 0}, {2, 0}, {0, 2}, {2, 2}, {1, 3}}),
        pset(1, {{0}, {4}, {7}}),
    };
    for (int trial = 0; trial < 5; ++trial) {
        std::vector<Point> pts;
        for (int i = 0; i < 4; ++i) pts.push_back(pt({coord(rng), coord(rng)}));
        corpus.push_back(PointSet(2, pts));
    }
    for (const auto& a : corpus) {
        StructureVerifier ver(a);
        for (int n = 1; n <= 5; ++n) CHECK(ver.verify(n).lhs_subset_of_rhs);
    }
}

TEST_CASE("witnesses are genuine members of the symmetric difference") {
    // a 1-d set with a late onset: below it every witness must separate
    auto a = pset(1, {{0}, {5}, {7}});
    StructureVerifier ver(a);
    for (int n = 1; n <= 6; ++n) {
        auto v = ver.verify(n);
        if (v.equal) continue;
        REQUIRE(v.witness.has_value());
        auto lhs = sumset(a, n);
        auto rhs = ver.rhs(n);
        CHECK(lhs.contains(*v.witness) != rhs.contains(*v.witness));
    }
}

TEST_CASE("the base component does not depend on the choice of a0") {
    auto a = pset(2, {{0, 0}, {1, 1}, {2, 0}, {0, 3}});
    auto hull = convex_hull(a);
    auto lam = difference_lattice(a);
    for (int n : {1, 2, 3}) {
        PointSet ref = polytope_lattice_points(hull, Int(n), lam, scale(Int(n), a[0]));
        for (const Point& a0 : a) {
            PointSet alt = polytope_lattice_points(hull, Int(n), lam, scale(Int(n), a0));
            CHECK(alt == ref);
        }
    }
}

TEST_CASE("structure thresholds") {
    auto rep = structure_thresholds(pset(1, {{0}, {2}, {5}}));
    auto* gw = rep.find("one_dim_gw_bound");
    REQUIRE(gw);
    CHECK(gw->applicable);
    CHECK(gw->value == 4);  // w - l + 2
    auto* l21 = rep.find("one_dim_width_bound");
    REQUIRE(l21);
    CHECK(l21->value == 4);
    auto* general = rep.find("general_effective_structure");
    REQUIRE(general);
    CHECK(general->value == pow_int(Int(15), 13));  // (1*3*5)^{13}

    // simplex-K bound (d+1)(K-1)+1 with K = 4 for {0,2,5}
    auto* sk = rep.find("simplex_K_bound");
    REQUIRE(sk);
    CHECK(sk->applicable);
    CHECK(sk->value == Int(2) * 3 + 1);

    auto* ka = rep.find("interior_margin_constant");
    REQUIRE(ka);
    CHECK(ka->value == Int(4) * 1 * pow_int(Int(3), 3) * pow_int(Int(5), 3));

    auto d2 = structure_thresholds(pset(2, {{0, 0}, {1, 0}, {0, 1}, {1, 1}}));
    auto* g2 = d2.find("general_effective_structure");
    REQUIRE(g2);
    CHECK(g2->value == pow_int(Int(2 * 4 * 1), 13 * 64));
}

TEST_CASE("structure holds from (d+1)(K-1)+1 on for simplex instances") {
    for (auto a : {pset(1, {{0}, {2}, {3}}), pset(1, {{0}, {2}, {5}}),
                   pset(2, {{0, 0}, {2, 1}, {1, 3}, {1, 1}})}) {
        auto sp = khovanskii_poly_simplex(translate(a, neg(convex_hull(a).vertices[0])));
        int k = K_of(sp.family);
        int bound = (a.dim() + 1) * (k - 1) + 1;
        StructureVerifier ver(a);
        for (int n = std::max(1, bound); n <= bound + 2; ++n) CHECK(ver.verify(n).equal);
    }
}

TEST_CASE("exceptional margins stay under the interior-representability constant") {
    for (auto a : {pset(1, {{0}, {2}, {5}}), pset(1, {{0}, {4}, {7}}),
                   pset(2, {{0, 0}, {2, 0}, {0, 3}, {1, 1}})}) {
        auto rep = structure_thresholds(a);
        auto* ka = rep.find("interior_margin_constant");
        REQUIRE(ka);
        auto cone = cone_of(a);
        auto region = convex_hull(a);
        auto exc = exceptional_set(a, region, 10);
        Rat margin = 0;
        for (const Point& x : exc) {
            Rat closest = -1;
            for (const Point& n : cone.normals) {
                Rat dist = Rat(dot(n, x)) / Rat(one_norm(n));
                if (closest < 0 || dist < closest) closest = dist;
            }
            if (closest > margin) margin = closest;
        }
        CHECK(margin <= Rat(ka->value));
    }
}

TEST_CASE("A+ decomposition inside a box for simplex-contained instances") {
    // B basis inside A, 0 extremal: C_B ∩ P(A) = A+ + P(B ∪ {0})
    auto a = pset(2, {{0, 0}, {2, 0}, {0, 3}, {1, 1}});
    auto b = pset(2, {{2, 0}, {0, 3}});
    PsaDecider dec(a);
    auto cone_b = cone_of(pset(2, {{0, 0}, {2, 0}, {0, 3}}));
    const int box = 12;
    std::vector<Point> inside;  // P(A) ∩ C_B within the box
    for (long long x = 0; x <= box; ++x)
        for (long long y = 0; y <= box; ++y) {
            Point p = pt({x, y});
            if (cone_b.contains(p) && dec.contains(p)) inside.push_back(p);
        }
    auto in_set = PointSet(2, inside);
    std::vector<Point> aplus;
    for (const Point& p : inside) {
        bool minimal = true;
        for (const Point& bb : b) {
            Point q = sub(p, bb);
            if (cone_b.contains(q) && dec.contains(q)) { minimal = false; break; }
        }
        if (minimal) aplus.push_back(p);
    }
    // every element of the intersection splits as a+ + nonneg combo of B
    for (const Point& p : inside) {
        bool decomposed = false;
        for (const Point& ap : aplus) {
            Point rest = sub(p, ap);
            // rest = s*(2,0) + t*(0,3) with s,t >= 0 integers
            if (rest[0] >= 0 && rest[1] >= 0 && rest[0] % 2 == 0 && rest[1] % 3 == 0) {
                decomposed = true;
                break;
            }
        }
        CHECK(decomposed);
    }
    // and the sum set stays inside the intersection (checked within the box)
    for (const Point& ap : aplus)
        for (long long s = 0; s <= 2; ++s)
            for (long long t = 0; t <= 2; ++t) {
                Point p = add(ap, add(scale(Int(s), pt({2, 0})), scale(Int(t), pt({0, 3}))));
                if (p[0] > box || p[1] > box) continue;
                CHECK(in_set.contains(p));
            }
}
