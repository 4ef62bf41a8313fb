#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sumsetlab/khovanskii.hpp"
#include "sumsetlab/sumset.hpp"

namespace sumsetlab {

// Right-hand side of the structure identity:
//   (N H(A) ∩ (a0 N + Λ_{A-A})) \ ∪_{a in ex(H(A))} (aN - E(a-A)),
// with each E(a-A) computed only inside N H(a-A) = aN - N H(A).
PointSet rhs_structure_set(const PointSet& a, int n,
                           const EnumerationBudget& budget = default_budget());

struct StructureVerdict {
    int n;
    Int lhs_size;
    Int rhs_size;
    bool equal;
    std::optional<Point> witness;  // an element of the symmetric difference
    bool lhs_subset_of_rhs;        // must hold unconditionally
};

StructureVerdict verify_structure(const PointSet& a, int n,
                                  const EnumerationBudget& budget = default_budget());

struct StructureReport {
    PointSet instance;
    std::vector<StructureVerdict> verdicts;
    int empirical_onset;  // minimal N0 with equality on [N0, N_max]; N_max+1 if none
    int horizon;
};

StructureReport empirical_structure_onset(const PointSet& a, int n_max,
                                          const EnumerationBudget& budget = default_budget());

// All applicable structure thresholds as exact big integers. The simplex-K
// bound is computed only when the B-minimal enumeration certifies K(A,B).
ThresholdReport structure_thresholds(const PointSet& a,
                                     const EnumerationBudget& budget = default_budget());

// Shared machinery for one instance: hull, translates, exceptional sets.
// Exceptional points are cached per extremal vertex at the largest scale
// requested so far and filtered down for smaller N.
class StructureVerifier {
public:
    explicit StructureVerifier(const PointSet& a,
                               const EnumerationBudget& budget = default_budget());

    PointSet rhs(int n);
    StructureVerdict verify(int n);
    const PolytopeDescription& hull() const { return hull_; }

    // E(a - A) ∩ N·H(a - A) for an extremal vertex a
    PointSet exceptional_in_window(std::size_t vertex_index, int n);

private:
    PointSet a_;
    PolytopeDescription hull_;
    IntegerLattice diff_lattice_;
    EnumerationBudget budget_;
    struct VertexData {
        Point vertex;
        PointSet translated;            // a - A
        PolytopeDescription trans_hull; // H(a - A)
        int cached_scale = 0;
        PointSet cached_exceptional;    // E(a-A) ∩ cached_scale·H(a-A)
    };
    std::vector<VertexData> vertices_;
};

}  // namespace sumsetlab
