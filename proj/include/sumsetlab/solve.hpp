#pragma once

#include <optional>
#include <vector>

#include "sumsetlab/linalg.hpp"
#include "sumsetlab/point.hpp"

namespace sumsetlab {

// Integer matrix with the K >= 1 convention the quantitative lemmas use.
struct IntegerMatrix {
    linalg::IntMat entries;

    int rows() const { return static_cast<int>(entries.size()); }
    int cols() const { return entries.empty() ? 0 : static_cast<int>(entries.front().size()); }
    Int max_abs_entry() const;           // K, clamped to >= 1
    std::vector<Int> apply(const std::vector<Int>& x) const;  // M x
};

// Nonzero X with MX = 0 and ||X||_inf <= (K n)^m; found by exact kernel
// computation plus size reduction, with the bound asserted on the output.
Point small_kernel_vector(const IntegerMatrix& m);

// n - rank(M) independent kernel vectors; product of sup-norms is checked
// against the Siegel-type bound (m'!)^{1/2} n^{m'/2} K^{m'} with m' = rank.
struct KernelBasisResult {
    std::vector<Point> basis;
    Int norm_product;
    bool bound_holds;  // squared comparison, exact
};
KernelBasisResult bounded_kernel_basis(const IntegerMatrix& m);

// Strictly positive y with My = b given a strictly positive witness x,
// via the column-removal induction; output obeys the bound
//   2 n^{m+1} m^m K1^{2m} + m^m K1^{m-1} K2.
std::vector<Int> positive_solution(const IntegerMatrix& m, const std::vector<Int>& b,
                                   const std::vector<Int>& witness_x);

Int corollary_positive_bound(int m, int n, const Int& k1, const Int& k2);
Int small_kernel_bound(int m, int n, const Int& k);
Int minimal_solution_bound(int m, int n, const Int& k1, const Int& k2);

// Exact decision: does M y = c admit an integer solution with every
// coordinate >= 1?  Returns a witness when one exists. Complete for the
// pointed-cone and lineality-heavy cases; a residual mixed case falls back
// to a budgeted bounded search.
struct ExtensionResult {
    bool feasible;
    std::vector<Int> witness;  // nonempty iff feasible and constructed
};
ExtensionResult positive_extension(const IntegerMatrix& m, const std::vector<Int>& c,
                                   const EnumerationBudget& budget = default_budget());

// S_min of the split system M (x; y) = b: the <_unif-antichain of x-parts
// of strictly positive solutions, by exhaustive scan of the x-box
// min(lemma bound, box_cap).
struct MinimalSolutionFamily {
    std::vector<std::vector<Int>> solutions;  // antichain, canonical order
    int n1 = 0;
    int n2 = 0;
    Int lemma_bound;
    Int box_used;
    bool certified = false;  // box covered the full lemma bound
};
MinimalSolutionFamily minimal_positive_solutions(const IntegerMatrix& m,
                                                 const std::vector<Int>& b, int n1,
                                                 const Int& box_cap,
                                                 const EnumerationBudget& budget = default_budget());

}  // namespace sumsetlab
