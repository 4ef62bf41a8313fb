#pragma once

#include <optional>
#include <vector>

#include "sumsetlab/linalg.hpp"
#include "sumsetlab/point.hpp"

namespace sumsetlab {

// A full- or partial-rank sublattice of Z^d held in Hermite normal form,
// so equal lattices have identical representations.
class IntegerLattice {
public:
    IntegerLattice() : ambient_dim_(0) {}
    IntegerLattice(int ambient_dim, linalg::HnfResult hnf)
        : ambient_dim_(ambient_dim), hnf_(std::move(hnf)) {}

    int ambient_dim() const { return ambient_dim_; }
    int rank() const { return static_cast<int>(hnf_.basis.size()); }
    const std::vector<Point>& basis() const { return hnf_.basis; }
    const std::vector<int>& pivots() const { return hnf_.pivots; }

    bool contains(const Point& x) const;
    // Coordinates of x in the HNF basis; nullopt when x is not in the lattice.
    std::optional<std::vector<Int>> coordinates(const Point& x) const;

    // |det| of the basis Gram data: product of the HNF pivots. For a
    // full-rank lattice this is the index [Z^d : L].
    Int pivot_product() const;

    friend bool operator==(const IntegerLattice& a, const IntegerLattice& b) {
        return a.ambient_dim_ == b.ambient_dim_ && a.hnf_.basis == b.hnf_.basis;
    }

private:
    int ambient_dim_;
    linalg::HnfResult hnf_;
};

// Lattice generated by a set of integer vectors. An empty generator list
// needs the ambient dimension spelled out.
IntegerLattice hermite_normal_form(const std::vector<Point>& generators);
IntegerLattice hermite_normal_form(const std::vector<Point>& generators, int ambient_dim);

inline IntegerLattice lattice_of(const PointSet& a) {
    return hermite_normal_form(a.points(), a.dim());
}

// Lattice of differences Lambda_{A-A}, generated by a_i - a_0.
IntegerLattice difference_lattice(const PointSet& a);

inline bool lattice_contains(const IntegerLattice& l, const Point& x) {
    return l.contains(x);
}

// Finite abelian quotient L_sup / L_sub as invariant factors d_1 | ... | d_k
// (each >= 2; the trivial group has none) plus a projection onto the factor
// representation whose kernel is exactly L_sub.
class FiniteAbelianGroup {
public:
    const std::vector<Int>& invariant_factors() const { return factors_; }
    const Int& order() const { return order_; }
    bool trivial() const { return factors_.empty(); }

    // Residues of v per invariant factor; requires v in the superlattice.
    std::vector<Int> project(const Point& v) const;

    // Maximal order of an element (1 for the trivial group).
    Int max_element_order() const { return factors_.empty() ? Int(1) : factors_.back(); }

    // Small-group element indexing (mixed-radix over the factors), used by
    // the zero-sum searches. Index 0 is the identity.
    unsigned long long index_of(const std::vector<Int>& residues) const;
    std::vector<Int> residues_of(unsigned long long index) const;
    unsigned long long add_indices(unsigned long long a, unsigned long long b) const;
    unsigned long long neg_index(unsigned long long a) const;

private:
    friend FiniteAbelianGroup quotient_group(const IntegerLattice&, const IntegerLattice&);
    friend FiniteAbelianGroup group_from_invariants(const std::vector<Int>&);

    std::vector<Int> factors_;
    Int order_ = 1;
    // projection data: v -> coords in sup basis -> * V -> residues mod diag
    IntegerLattice sup_;
    linalg::IntMat v_;
    std::vector<Int> diag_;
    std::vector<std::size_t> factor_slots_;  // positions in diag with d >= 2
};

// Quotient of two equal-rank nested lattices. Errors when L_sub is not
// contained in L_sup or the ranks differ (infinite quotient).
FiniteAbelianGroup quotient_group(const IntegerLattice& l_sup, const IntegerLattice& l_sub);

// A standalone abstract group (for CLI / Davenport experiments).
FiniteAbelianGroup group_from_invariants(const std::vector<Int>& factors);

}  // namespace sumsetlab
