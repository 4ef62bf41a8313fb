#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "sumsetlab/numbers.hpp"
#include "sumsetlab/point.hpp"

namespace sumsetlab::linalg {

using IntMat = std::vector<std::vector<Int>>;
using RatMat = std::vector<std::vector<Rat>>;
using RatVec = std::vector<Rat>;

int rank(const IntMat& m);

// Bareiss fraction-free determinant of a square integer matrix.
Int determinant(IntMat m);

// Basis of { x in Z^n : M x = 0 } for an m-by-n integer matrix, as rows.
// The returned lattice is saturated (it is the full integer kernel).
IntMat kernel_basis(const IntMat& m);

// Greedy sup-norm reduction of a set of independent integer vectors,
// followed by a short-vector polish for small ranks. Deterministic.
IntMat size_reduce(IntMat basis);

// Solve M x = rhs over the rationals (M as rows, x column vector).
// Returns std::nullopt when inconsistent. When the system is
// underdetermined an arbitrary solution (free variables = 0) is returned.
std::optional<RatVec> solve_rational(const IntMat& m, const std::vector<Int>& rhs);
std::optional<RatVec> solve_rational_rat(const RatMat& m, const RatVec& rhs);

// Row-style Hermite normal form. Pivot of row i is its last nonzero entry,
// pivot columns strictly increase with i, pivots are positive, and entries
// below a pivot in its column are reduced into [0, pivot). Zero rows are
// dropped. Two generating sets of the same lattice produce identical output.
struct HnfResult {
    IntMat basis;             // HNF rows
    std::vector<int> pivots;  // pivot column of each row
};
HnfResult hermite_form(const IntMat& generators, int ambient_dim);

// Like hermite_form but also returns T with basis = T * generators.
struct HnfTransformResult {
    IntMat basis;
    std::vector<int> pivots;
    IntMat transform;  // rows of `basis` as integer combinations of the generators
};
HnfTransformResult hermite_form_with_transform(const IntMat& generators, int ambient_dim);

// Coordinates of x in an HNF basis, when x lies in the lattice.
std::optional<std::vector<Int>> hnf_coordinates(const HnfResult& h, const Point& x);

// Smith normal form D = U * m * V of a square integer matrix; only V and
// the diagonal of D are produced (that is all the quotient construction
// needs). diag entries are nonnegative and each divides the next.
struct SnfResult {
    std::vector<Int> diag;
    IntMat v;  // unimodular, columns accumulate the column operations
};
SnfResult smith_form(IntMat m);

}  // namespace sumsetlab::linalg
