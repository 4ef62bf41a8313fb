#pragma once

#include <map>
#include <optional>
#include <vector>

#include "sumsetlab/lattice.hpp"
#include "sumsetlab/point.hpp"
#include "sumsetlab/polytope.hpp"

namespace sumsetlab {

// N-fold sumset NA = { a_1 + ... + a_N : a_i in A }, computed incrementally.
PointSet sumset(const PointSet& a, int n, const EnumerationBudget& budget = default_budget());

struct GrowthTable {
    PointSet instance;
    std::vector<Int> sizes;  // sizes[k] = |(k+1)A|
    Int size_at(int n) const { return sizes.at(static_cast<std::size_t>(n - 1)); }
    int n_max() const { return static_cast<int>(sizes.size()); }
};

// Budget overruns surface as this error so callers keep the completed prefix.
struct PartialTableError : BudgetError {
    PartialTableError(const std::string& what, unsigned long long budget_value,
                      std::vector<Int> prefix_sizes)
        : BudgetError(what, budget_value), prefix(std::move(prefix_sizes)) {}
    std::vector<Int> prefix;
};

GrowthTable growth_table(const PointSet& a, int n_max,
                         const EnumerationBudget& budget = default_budget());

// Smallest N with v in NA (N_A(0) = 0), or nullopt if none up to `cap`.
std::optional<int> min_rep_length(const PointSet& a, const Point& v, int cap,
                                  const EnumerationBudget& budget = default_budget());

// Decides x in P(A) = union of all NA. Requires 0 in A and 0 extremal in
// H(A); the sum of the cone facet normals is a strictly positive integer
// functional on A \ {0}, which bounds representation depth and certifies
// termination.
class PsaDecider {
public:
    explicit PsaDecider(const PointSet& a, const EnumerationBudget& budget = default_budget());

    bool contains(const Point& x);
    const ConeDescription& cone() const { return cone_; }
    const IntegerLattice& lattice() const { return lattice_; }

private:
    bool reachable(const Point& x);

    PointSet a_;
    std::vector<Point> steps_;  // A \ {0}
    ConeDescription cone_;
    IntegerLattice lattice_;
    Point functional_;  // sum of cone facet normals
    std::map<Point, bool> memo_;
    EnumerationBudget budget_;
};

bool psa_membership(const PointSet& a, const Point& x,
                    const EnumerationBudget& budget = default_budget());

// E(A) ∩ region, where E(A) = (C_A ∩ Λ_A) \ P(A).
PointSet exceptional_set(const PointSet& a, const PolytopeDescription& region,
                         const Int& region_scale = 1,
                         const EnumerationBudget& budget = default_budget());

// max_{a1,a2 in A} ||a1 - a2||_inf
Int width(const PointSet& a);

}  // namespace sumsetlab
