#include "sumsetlab/sumset.hpp"

#include <algorithm>

namespace sumsetlab {

namespace {

std::vector<Point> shifted_merge(const std::vector<Point>& s, const PointSet& a,
                                 const EnumerationBudget& budget) {
    if (s.size() * a.size() > budget.max_points)
        throw BudgetError("sumset: intermediate size exceeds point budget", budget.max_points);
    std::vector<Point> next;
    next.reserve(s.size() * a.size());
    for (const Point& p : s)
        for (const Point& q : a) next.push_back(add(p, q));
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    if (next.size() > budget.max_points)
        throw BudgetError("sumset: result size exceeds point budget", budget.max_points);
    return next;
}

}  // namespace

PointSet sumset(const PointSet& a, int n, const EnumerationBudget& budget) {
    if (a.empty()) throw UsageError("sumset of an empty set");
    if (n < 1) throw UsageError("sumset requires N >= 1");
    std::vector<Point> s(a.begin(), a.end());
    for (int k = 2; k <= n; ++k) s = shifted_merge(s, a, budget);
    return PointSet(a.dim(), std::move(s));
}

GrowthTable growth_table(const PointSet& a, int n_max, const EnumerationBudget& budget) {
    if (a.empty()) throw UsageError("growth_table of an empty set");
    if (n_max < 1) throw UsageError("growth_table requires N_max >= 1");
    GrowthTable t;
    t.instance = a;
    std::vector<Point> s(a.begin(), a.end());
    t.sizes.push_back(Int(s.size()));
    for (int k = 2; k <= n_max; ++k) {
        try {
            s = shifted_merge(s, a, budget);
        } catch (const BudgetError& e) {
            throw PartialTableError("growth_table truncated at N = " + std::to_string(k - 1),
                                    e.budget, t.sizes);
        }
        t.sizes.push_back(Int(s.size()));
    }
    return t;
}

std::optional<int> min_rep_length(const PointSet& a, const Point& v, int cap,
                                  const EnumerationBudget& budget) {
    if (!a.contains(zero_point(a.dim())))
        throw UsageError("min_rep_length requires 0 in A");
    if (cap < 0) throw UsageError("min_rep_length: negative cap");
    if (is_zero(v)) return 0;
    std::vector<Point> s(a.begin(), a.end());
    if (std::binary_search(s.begin(), s.end(), v)) return 1;
    for (int k = 2; k <= cap; ++k) {
        s = shifted_merge(s, a, budget);
        if (std::binary_search(s.begin(), s.end(), v)) return k;
    }
    return std::nullopt;
}

PsaDecider::PsaDecider(const PointSet& a, const EnumerationBudget& budget)
    : a_(a), budget_(budget) {
    if (!a.contains(zero_point(a.dim())))
        throw UsageError("psa_membership requires 0 in A (translate first)");
    PolytopeDescription hull = convex_hull(a);
    if (!hull.vertices.contains(zero_point(a.dim())))
        throw UsageError("psa_membership requires 0 extremal in H(A); translate by an extremal point");
    cone_ = cone_of(a);
    lattice_ = lattice_of(a);
    functional_ = zero_point(a.dim());
    for (const Point& n : cone_.normals) functional_ = add(functional_, n);
    for (const Point& p : a) {
        if (is_zero(p)) continue;
        steps_.push_back(p);
        if (dot(functional_, p) < 1)
            throw std::logic_error("positive functional failed on a generator");
    }
}

bool PsaDecider::contains(const Point& x) {
    if (static_cast<int>(x.size()) != a_.dim()) throw UsageError("dimension mismatch");
    if (is_zero(x)) return true;
    if (!cone_.contains(x)) return false;
    if (!lattice_.contains(x)) return false;
    return reachable(x);
}

bool PsaDecider::reachable(const Point& x) {
    if (is_zero(x)) return true;
    auto it = memo_.find(x);
    if (it != memo_.end()) return it->second;
    if (memo_.size() > budget_.max_points)
        throw BudgetError("psa_membership: memo exceeds point budget", budget_.max_points);
    memo_[x] = false;  // depth strictly decreases along <functional, .>, no cycles
    bool ok = false;
    for (const Point& step : steps_) {
        Point y = sub(x, step);
        if (!cone_.contains(y)) continue;
        if (reachable(y)) { ok = true; break; }
    }
    memo_[x] = ok;
    return ok;
}

bool psa_membership(const PointSet& a, const Point& x, const EnumerationBudget& budget) {
    PsaDecider d(a, budget);
    return d.contains(x);
}

PointSet exceptional_set(const PointSet& a, const PolytopeDescription& region,
                         const Int& region_scale, const EnumerationBudget& budget) {
    PsaDecider dec(a, budget);
    PointSet candidates =
        polytope_lattice_points(region, region_scale, dec.lattice(), zero_point(a.dim()), budget);
    std::vector<Point> out;
    for (const Point& x : candidates) {
        if (!dec.cone().contains(x)) continue;
        if (!dec.contains(x)) out.push_back(x);
    }
    return PointSet(a.dim(), std::move(out));
}

Int width(const PointSet& a) {
    if (a.empty()) throw UsageError("width of an empty set");
    Int w = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = i + 1; j < a.size(); ++j)
            w = std::max(w, sup_norm(sub(a[i], a[j])));
    return w;
}

}  // namespace sumsetlab
