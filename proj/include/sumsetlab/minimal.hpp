#pragma once

#include <optional>
#include <vector>

#include "sumsetlab/lattice.hpp"
#include "sumsetlab/point.hpp"
#include "sumsetlab/sumset.hpp"

namespace sumsetlab {

// S(A,B): 0 together with the u in P(A) whose every minimal-length
// representation avoids B ∪ {0}.
struct BMinimalElement {
    Point u;
    int rep_length;  // N_A(u)
    friend bool operator<(const BMinimalElement& a, const BMinimalElement& b) {
        return a.u < b.u;
    }
};

struct BMinimalFamily {
    std::vector<BMinimalElement> elements;
    PointSet basis_b;
    bool complete = false;   // certified exhaustive
    int layers_explored = 0;

    bool contains(const Point& p) const;
};

// Layered BFS. A layer containing no new B-minimal element certifies that
// none appear later (every longer minimal representation factors through
// the previous layer), so `complete` is sound, not heuristic. `cap` bounds
// the number of layers; running into it leaves complete=false.
BMinimalFamily b_minimal_elements(const PointSet& a, const PointSet& b, int cap,
                                  const EnumerationBudget& budget = default_budget());

// K(A,B) = max N_A(u) over S(A,B); requires a complete family.
int K_of(const BMinimalFamily& family);
int K_of(const PointSet& a, const PointSet& b, int cap = 256,
         const EnumerationBudget& budget = default_budget());

// Exact Davenport constant by longest zero-sum-free sequence search.
// Limited to |G| <= 64 (bitmask states); larger orders raise a BudgetError
// whose message carries the bound m(1 + log|G|/m) instead.
int davenport_constant(const FiniteAbelianGroup& g,
                       const EnumerationBudget& budget = default_budget());

// k(G,H): longest sequence over H with no zero subsum and no subsum of
// length > 1 landing in H. Exact search, |G| <= 64.
int k_constant(const FiniteAbelianGroup& g, const std::vector<std::vector<Int>>& h_residues,
               const EnumerationBudget& budget = default_budget());

// Nathanson–Ruzsa useless exponent vectors over the canonical ordering of A.
struct UselessVector {
    std::vector<Int> exponents;
    std::vector<Int> witness;  // lex-smaller, equal length, equal weighted sum
};

struct UselessFamily {
    PointSet instance;                  // fixes the element ordering
    std::vector<UselessVector> members; // antichain under <=_unif
    int cap_used = 0;
    bool certified = false;  // counts reproduced |NA| on the validation window
};

// All <=_unif-minimal useless vectors with ||x||_inf <= norm_cap, with
// cap-and-verify certification: the inclusion-exclusion counts must
// reproduce |NA| on a window of width (affine dim + 2) past the largest
// member norm.
UselessFamily minimal_useless(const PointSet& a, int norm_cap,
                              const EnumerationBudget& budget = default_budget());

// The count sum_{U' subset members} (-1)^{|U'|} B(N, U'); exact for all N
// when the family is the full U_min.
Int useless_count_at(const UselessFamily& family, const Int& n,
                     const EnumerationBudget& budget = default_budget());

}  // namespace sumsetlab
