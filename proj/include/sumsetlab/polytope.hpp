#pragma once

#include <optional>
#include <vector>

#include "sumsetlab/errors.hpp"
#include "sumsetlab/lattice.hpp"
#include "sumsetlab/point.hpp"

namespace sumsetlab {

// One supporting halfspace { x : <normal, x> >= offset }. Normals are
// primitive integer vectors lying in span(A - A); offsets of hulls of
// integer points are integers but kept rational for generality.
struct Facet {
    Point normal;
    Rat offset;
    friend bool operator==(const Facet& a, const Facet& b) {
        return a.normal == b.normal && a.offset == b.offset;
    }
    friend bool operator<(const Facet& a, const Facet& b) {
        if (a.normal != b.normal) return a.normal < b.normal;
        return a.offset < b.offset;
    }
};

struct PolytopeDescription {
    PointSet vertices;          // = ex(H(A))
    std::vector<Facet> facets;  // irreducible, canonically ordered
    int affine_dim = 0;         // dim span(A - A)
    Point base;                 // a point of the affine hull
    std::vector<Point> span_basis;  // integer spanning set of span(A - A)
    std::vector<Point> perp_basis;  // integer basis of span(A - A)^perp

    bool contains(const Point& x) const;
    bool contains_rational(const std::vector<Rat>& x) const;
};

struct ConeDescription {
    std::vector<Point> normals;  // primitive; cone = span ∩ {<n,x> >= 0}
    int spanning_dim = 0;
    std::vector<Point> span_basis;
    std::vector<Point> perp_basis;

    bool contains(const Point& x) const;
};

// Exact convex hull by supporting-hyperplane enumeration over point
// subsets; intended for the small dimensions this library works in.
PolytopeDescription convex_hull(const PointSet& a);

// Cone generated by A (requires 0 in A). Facet normals are exactly the
// c_i = 0 facets of the hull description.
ConeDescription cone_of(const PointSet& a);

// Vertex set B of H(A) when H(A) is a simplex within its affine span
// (|ex(H(A))| = affine_dim + 1); empty otherwise.
std::optional<PointSet> is_simplex(const PointSet& a);

// r! * vol(H(A)) measured against the lattice Z^d ∩ span(A - A); an exact
// integer (r = affine dimension).
Int normalized_volume(const PointSet& a);

// Family of full-dimensional simplices on vertices of H(A) whose union is
// H(A); greedily pruned against a half-integer sample grid.
std::vector<PointSet> caratheodory_cover(const PointSet& a);

// Points of (shift + L) inside N * P, by bounding-box scan + facet filter.
PointSet polytope_lattice_points(const PolytopeDescription& p, const Int& n,
                                 const IntegerLattice& l, const Point& shift,
                                 const EnumerationBudget& budget = default_budget());

// Primitive integer basis of span(A - A) ∩ Z^d (the saturated span lattice).
linalg::IntMat saturated_span_basis(const PointSet& a);

}  // namespace sumsetlab
