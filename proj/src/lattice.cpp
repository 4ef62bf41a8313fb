#include "sumsetlab/lattice.hpp"

#include <algorithm>

#include "sumsetlab/errors.hpp"

namespace sumsetlab {

bool IntegerLattice::contains(const Point& x) const {
    if (static_cast<int>(x.size()) != ambient_dim_)
        throw UsageError("lattice_contains: dimension mismatch");
    return coordinates(x).has_value();
}

std::optional<std::vector<Int>> IntegerLattice::coordinates(const Point& x) const {
    if (static_cast<int>(x.size()) != ambient_dim_)
        throw UsageError("lattice coordinates: dimension mismatch");
    return linalg::hnf_coordinates(hnf_, x);
}

Int IntegerLattice::pivot_product() const {
    Int p = 1;
    for (std::size_t i = 0; i < hnf_.basis.size(); ++i)
        p *= hnf_.basis[i][static_cast<std::size_t>(hnf_.pivots[i])];
    return p;
}

IntegerLattice hermite_normal_form(const std::vector<Point>& generators) {
    if (generators.empty())
        throw UsageError("hermite_normal_form: empty generator list with unspecified ambient dimension");
    return hermite_normal_form(generators, static_cast<int>(generators.front().size()));
}

IntegerLattice hermite_normal_form(const std::vector<Point>& generators, int ambient_dim) {
    if (ambient_dim <= 0) throw UsageError("hermite_normal_form: ambient dimension must be positive");
    return IntegerLattice(ambient_dim, linalg::hermite_form(generators, ambient_dim));
}

IntegerLattice difference_lattice(const PointSet& a) {
    if (a.empty()) throw UsageError("difference_lattice of empty set");
    std::vector<Point> gens;
    const Point& base = a[0];
    for (std::size_t i = 1; i < a.size(); ++i) gens.push_back(sub(a[i], base));
    return hermite_normal_form(gens, a.dim());
}

std::vector<Int> FiniteAbelianGroup::project(const Point& v) const {
    auto t = sup_.coordinates(v);
    if (!t) throw UsageError("project: vector is not in the superlattice");
    std::size_t k = t->size();
    std::vector<Int> res(factor_slots_.size(), 0);
    for (std::size_t out = 0; out < factor_slots_.size(); ++out) {
        std::size_t j = factor_slots_[out];
        Int s = 0;
        for (std::size_t i = 0; i < k; ++i) s += (*t)[i] * v_[i][j];
        res[out] = mod_floor(s, factors_[out]);
    }
    return res;
}

unsigned long long FiniteAbelianGroup::index_of(const std::vector<Int>& residues) const {
    if (residues.size() != factors_.size()) throw UsageError("bad residue tuple");
    unsigned long long idx = 0;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        Int r = mod_floor(residues[i], factors_[i]);
        idx = idx * static_cast<unsigned long long>(factors_[i]) +
              static_cast<unsigned long long>(r);
    }
    return idx;
}

std::vector<Int> FiniteAbelianGroup::residues_of(unsigned long long index) const {
    std::vector<Int> res(factors_.size(), 0);
    for (std::size_t i = factors_.size(); i-- > 0;) {
        unsigned long long f = static_cast<unsigned long long>(factors_[i]);
        res[i] = Int(index % f);
        index /= f;
    }
    return res;
}

unsigned long long FiniteAbelianGroup::add_indices(unsigned long long a,
                                                   unsigned long long b) const {
    auto ra = residues_of(a);
    auto rb = residues_of(b);
    for (std::size_t i = 0; i < ra.size(); ++i) ra[i] = mod_floor(ra[i] + rb[i], factors_[i]);
    return index_of(ra);
}

unsigned long long FiniteAbelianGroup::neg_index(unsigned long long a) const {
    auto ra = residues_of(a);
    for (std::size_t i = 0; i < ra.size(); ++i) ra[i] = mod_floor(-ra[i], factors_[i]);
    return index_of(ra);
}

FiniteAbelianGroup quotient_group(const IntegerLattice& l_sup, const IntegerLattice& l_sub) {
    if (l_sup.ambient_dim() != l_sub.ambient_dim())
        throw UsageError("quotient_group: ambient dimension mismatch");
    if (l_sup.rank() != l_sub.rank())
        throw UsageError("quotient_group: rank mismatch, quotient would be infinite");
    // change of basis C with sub = C * sup
    std::size_t k = static_cast<std::size_t>(l_sup.rank());
    linalg::IntMat c(k);
    for (std::size_t i = 0; i < k; ++i) {
        auto t = l_sup.coordinates(l_sub.basis()[i]);
        if (!t) throw UsageError("quotient_group: sublattice is not contained in superlattice");
        c[i] = std::move(*t);
    }
    auto snf = linalg::smith_form(c);

    FiniteAbelianGroup g;
    g.sup_ = l_sup;
    g.v_ = std::move(snf.v);
    g.diag_ = std::move(snf.diag);
    g.order_ = 1;
    for (std::size_t i = 0; i < g.diag_.size(); ++i) {
        if (g.diag_[i] == 0)
            throw UsageError("quotient_group: degenerate sublattice (zero invariant factor)");
        g.order_ *= g.diag_[i];
        if (g.diag_[i] >= 2) {
            g.factors_.push_back(g.diag_[i]);
            g.factor_slots_.push_back(i);
        }
    }
    // SNF yields ascending divisibility once 1s are dropped
    for (std::size_t i = 0; i + 1 < g.factors_.size(); ++i) {
        if (g.factors_[i + 1] % g.factors_[i] != 0)
            throw std::logic_error("smith_form produced a non-divisible chain");
    }
    return g;
}

FiniteAbelianGroup group_from_invariants(const std::vector<Int>& factors) {
    FiniteAbelianGroup g;
    for (const Int& f : factors) {
        if (f < 2) throw UsageError("invariant factors must be >= 2");
        g.factors_.push_back(f);
        g.order_ *= f;
    }
    for (std::size_t i = 0; i + 1 < g.factors_.size(); ++i)
        if (g.factors_[i + 1] % g.factors_[i] != 0)
            throw UsageError("invariant factors must form a divisibility chain");
    // abstract group: projection data deliberately left empty
    return g;
}

}  // namespace sumsetlab
