#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sumsetlab/minimal.hpp"
#include "sumsetlab/polynomial.hpp"
#include "sumsetlab/polytope.hpp"
#include "sumsetlab/sumset.hpp"

namespace sumsetlab {

// ---- pipeline 1: empirical finite differences -----------------------------

struct FitResult {
    RationalPolynomial polynomial;
    int empirical_onset;  // minimal N0 with P(N) = |NA| for N0 <= N <= N_max
    int horizon;          // the onset is a certificate only up to here
};

// Interpolates the last d+1 table entries and scans backwards for the onset.
FitResult fit_polynomial(const GrowthTable& table, int d);

// ---- pipeline 2: the useless-vector inclusion-exclusion -------------------

// |NA| = sum over U' of (-1)^{|U'|} binom(N - ||u*||_1 + l - 1, l - 1),
// assembled as an exact polynomial identity (valid past the family onset).
RationalPolynomial khovanskii_poly_general(const UselessFamily& family,
                                           const EnumerationBudget& budget = default_budget());

// ---- pipeline 3: the simplex coset formula ---------------------------------

struct CosetMinimal {
    Point u;
    int rep_length;              // N_A(u)
    std::vector<Int> coords;     // u_{j,i}: floor of the B-coordinates
    Int delta;                   // N_A(u) - sum_i u_{j,i}
};

struct CosetData {
    std::vector<Int> residues;   // coset label in Lambda_A / Lambda_B
    std::vector<CosetMinimal> minimals;
    RationalPolynomial polynomial;  // P_g, in monomial form
    Int n_full;                  // N_{1..k}
    int onset;                   // N_{1..k} - d

    int coords_dim() const {
        return minimals.empty() ? 0 : static_cast<int>(minimals.front().coords.size());
    }
    // exact count of (NA)_g for any N >= 1, via truncated binomials
    Int count_at(const Int& n) const;
    // subset data: N_J for every nonempty J, paired with (-1)^{|J|-1}
    std::vector<std::pair<Int, int>> subset_shifts() const;
};

struct SimplexPolyResult {
    PointSet basis_b;            // the d basis vertices (0 excluded)
    FiniteAbelianGroup group;    // Lambda_A / Lambda_B
    std::vector<CosetData> cosets;
    RationalPolynomial total;
    int onset;                   // max_g N_{1..k} - d
    int k_bound;                 // k(Lambda_A/Lambda_B, A_B \ {0}), -1 if skipped
    BMinimalFamily family;
};

SimplexPolyResult khovanskii_poly_simplex(const PointSet& a,
                                          const EnumerationBudget& budget = default_budget());

// W(h) refinement of a single coset onset: h is minimal with W(h) != 0 and
// the equality #(NA)_g = P_g(N) starts exactly at N_{1..k} - d - h.
struct OnsetRefinement {
    int h;
    Int refined_onset;
};
OnsetRefinement onset_refinement(const CosetData& coset);

// ---- threshold calculators -------------------------------------------------

struct ThresholdEntry {
    std::string name;
    Int value;
    bool applicable;
    bool exact;  // true when the entry is an exact value rather than a bound
};

struct ThresholdReport {
    std::vector<ThresholdEntry> entries;
    const ThresholdEntry* find(const std::string& name) const;
};

ThresholdReport khovanskii_thresholds(const PointSet& a);

// min-max inclusion-exclusion: sum over nonempty J of (-1)^{|J|} max_{j in J} a_j
// equals -min_j a_j.
Int minmax_inclusion_exclusion(const std::vector<Int>& values);

}  // namespace sumsetlab
