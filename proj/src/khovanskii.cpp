#include "sumsetlab/khovanskii.hpp"

#include <algorithm>
#include <limits>
#include <map>

namespace sumsetlab {

FitResult fit_polynomial(const GrowthTable& table, int d) {
    int n_max = table.n_max();
    if (d < 0) throw UsageError("fit_polynomial: negative degree");
    if (n_max < d + 3) throw UsageError("fit_polynomial: table too short (need >= d+3 entries)");
    std::vector<Int> xs, ys;
    for (int n = n_max - d; n <= n_max; ++n) {
        xs.push_back(n);
        ys.push_back(table.size_at(n));
    }
    FitResult r;
    r.polynomial = interpolate(xs, ys);
    r.horizon = n_max;
    int onset = n_max - d;
    while (onset > 1 && r.polynomial(Int(onset - 1)) == Rat(table.size_at(onset - 1))) --onset;
    r.empirical_onset = onset;
    return r;
}

RationalPolynomial khovanskii_poly_general(const UselessFamily& family,
                                           const EnumerationBudget& budget) {
    if (family.instance.empty()) throw UsageError("khovanskii_poly_general: empty instance");
    std::size_t k = family.members.size();
    int ell = static_cast<int>(family.instance.size());
    if (k >= 63 || (1ull << k) > budget.max_nodes)
        throw BudgetError("khovanskii_poly_general: 2^|U_min| exceeds the subset budget",
                          budget.max_nodes);
    RationalPolynomial total;
    for (uint64_t mask = 0; mask < (1ull << k); ++mask) {
        std::vector<Int> ustar(static_cast<std::size_t>(ell), Int(0));
        for (std::size_t j = 0; j < k; ++j)
            if (mask & (1ull << j))
                for (int i = 0; i < ell; ++i)
                    ustar[static_cast<std::size_t>(i)] =
                        std::max(ustar[static_cast<std::size_t>(i)],
                                 family.members[j].exponents[static_cast<std::size_t>(i)]);
        Int norm1 = 0;
        for (const Int& v : ustar) norm1 += v;
        RationalPolynomial term = binomial_polynomial(norm1, static_cast<unsigned>(ell - 1));
        if (__builtin_popcountll(mask) % 2 == 0)
            total += term;
        else
            total -= term;
    }
    return total;
}

Int CosetData::count_at(const Int& n) const {
    unsigned d = static_cast<unsigned>(coords_dim());
    Int total = 0;
    for (const auto& [nj, sign] : subset_shifts())
        total += Int(sign) * binomial_count(n - nj + d, d);
    return total;
}

std::vector<std::pair<Int, int>> CosetData::subset_shifts() const {
    std::size_t k = minimals.size();
    if (k >= 63) throw BudgetError("coset subset enumeration too large", 62);
    std::vector<std::pair<Int, int>> out;
    out.reserve((1ull << k) - 1);
    for (uint64_t mask = 1; mask < (1ull << k); ++mask) {
        Int delta_max = 0;
        std::vector<Int> umax(minimals.front().coords.size(), Int(0));
        bool first = true;
        for (std::size_t j = 0; j < k; ++j) {
            if (!(mask & (1ull << j))) continue;
            const auto& mj = minimals[j];
            if (first) {
                delta_max = mj.delta;
                umax = mj.coords;
                first = false;
            } else {
                delta_max = std::max(delta_max, mj.delta);
                for (std::size_t i = 0; i < umax.size(); ++i)
                    umax[i] = std::max(umax[i], mj.coords[i]);
            }
        }
        Int nj = delta_max;
        for (const Int& v : umax) nj += v;
        int sign = (__builtin_popcountll(mask) % 2 == 1) ? 1 : -1;  // (-1)^{|J|-1}
        out.emplace_back(nj, sign);
    }
    return out;
}

SimplexPolyResult khovanskii_poly_simplex(const PointSet& a, const EnumerationBudget& budget) {
    PolytopeDescription hull = convex_hull(a);
    int d = a.dim();
    if (hull.affine_dim != d)
        throw UsageError("khovanskii_poly_simplex: A must span the ambient dimension");
    if (static_cast<int>(hull.vertices.size()) != d + 1)
        throw UsageError("khovanskii_poly_simplex: H(A) is not a simplex");
    Point zero = zero_point(d);
    if (!hull.vertices.contains(zero))
        throw UsageError("khovanskii_poly_simplex: translate A so 0 is a vertex of H(A)");

    SimplexPolyResult res;
    {
        std::vector<Point> bpts;
        for (const Point& v : hull.vertices)
            if (!is_zero(v)) bpts.push_back(v);
        res.basis_b = PointSet(d, std::move(bpts));
    }
    IntegerLattice lam_a = lattice_of(a);
    IntegerLattice lam_b = lattice_of(res.basis_b);
    res.group = quotient_group(lam_a, lam_b);

    // Davenport-style layer bound; closure certifies completeness either way
    res.k_bound = -1;
    int cap = 4096;
    if (res.group.order() <= 64) {
        std::vector<std::vector<Int>> h;
        for (const Point& p : a) {
            auto residues = res.group.project(p);
            bool zero_class = std::all_of(residues.begin(), residues.end(),
                                          [](const Int& v) { return v == 0; });
            if (!zero_class) h.push_back(residues);
        }
        res.k_bound = h.empty() ? 0 : k_constant(res.group, h, budget);
        cap = res.k_bound + 1;
    }
    res.family = b_minimal_elements(a, res.basis_b, std::max(cap, 1), budget);
    if (!res.family.complete)
        throw BudgetError("khovanskii_poly_simplex: S(A,B) enumeration did not close",
                          static_cast<unsigned long long>(cap));
    if (res.k_bound >= 0)
        for (const auto& e : res.family.elements)
            if (e.rep_length > res.k_bound)
                throw BoundViolationError("K(A,B) exceeded k(Lambda_A/Lambda_B, A_B \\ {0})");

    // group S(A,B) by coset; coordinates relative to the basis B
    const auto& bpts = res.basis_b.points();
    std::map<std::vector<Int>, std::vector<CosetMinimal>> cosets;
    for (const auto& e : res.family.elements) {
        CosetMinimal cm;
        cm.u = e.u;
        cm.rep_length = e.rep_length;
        // rational coordinates of u in basis B (columns)
        linalg::IntMat m(static_cast<std::size_t>(d), std::vector<Int>(bpts.size()));
        for (int i = 0; i < d; ++i)
            for (std::size_t j = 0; j < bpts.size(); ++j)
                m[static_cast<std::size_t>(i)][j] = bpts[j][static_cast<std::size_t>(i)];
        auto sol = linalg::solve_rational(m, e.u);
        if (!sol) throw std::logic_error("S(A,B) element escaped the cone of B");
        cm.coords.resize(bpts.size());
        Int coord_sum = 0;
        for (std::size_t j = 0; j < bpts.size(); ++j) {
            if ((*sol)[j] < 0) throw std::logic_error("negative B-coordinate of a minimal element");
            cm.coords[j] = floor_rat((*sol)[j]);
            coord_sum += cm.coords[j];
        }
        cm.delta = Int(e.rep_length) - coord_sum;
        if (cm.delta < 0) throw std::logic_error("negative slack Delta_j");
        cosets[res.group.project(e.u)].push_back(std::move(cm));
    }
    if (Int(cosets.size()) != res.group.order())
        throw std::logic_error("some coset of Lambda_A/Lambda_B has no minimal element");

    res.onset = std::numeric_limits<int>::min();
    for (auto& [residues, minimals] : cosets) {
        CosetData cd;
        cd.residues = residues;
        cd.minimals = std::move(minimals);
        RationalPolynomial pg;
        Int n_full = 0;
        for (const auto& [nj, sign] : cd.subset_shifts()) {
            RationalPolynomial term = binomial_polynomial(nj, static_cast<unsigned>(d));
            if (sign > 0)
                pg += term;
            else
                pg -= term;
            n_full = std::max(n_full, nj);
        }
        cd.polynomial = pg;
        cd.n_full = n_full;
        cd.onset = static_cast<int>(n_full) - d;
        res.onset = std::max(res.onset, cd.onset);
        res.total += pg;
        res.cosets.push_back(std::move(cd));
    }
    return res;
}

OnsetRefinement onset_refinement(const CosetData& coset) {
    auto shifts = coset.subset_shifts();
    // W(h) = sum over J with N_J = N_max - h of (-1)^{|J|}
    std::map<Int, Int> w;
    for (const auto& [nj, sign] : shifts) w[coset.n_full - nj] -= sign;  // (-1)^{|J|} = -sign
    OnsetRefinement r{0, 0};
    Int h = 0;
    while (true) {
        auto it = w.find(h);
        if (it != w.end() && it->second != 0) break;
        ++h;
        if (h > coset.n_full + 1) break;  // all W vanish; equality holds everywhere
    }
    r.h = static_cast<int>(h);
    r.refined_onset = coset.n_full - Int(coset.coords_dim()) - h;
    return r;
}

const ThresholdEntry* ThresholdReport::find(const std::string& name) const {
    for (const auto& e : entries)
        if (e.name == name) return &e;
    return nullptr;
}

ThresholdReport khovanskii_thresholds(const PointSet& a) {
    ThresholdReport rep;
    if (a.empty()) throw UsageError("khovanskii_thresholds: empty A");
    int d = a.dim();
    Int ell = Int(a.size());
    Int w = width(a);
    PolytopeDescription hull = convex_hull(a);
    bool full_rank = hull.affine_dim == d;
    bool simplex = static_cast<int>(hull.vertices.size()) == hull.affine_dim + 1;

    // Theorem "effective Khovanskii": (2 l w)^{(d+4) l}
    {
        Int base = 2 * ell * w;
        unsigned long exp = static_cast<unsigned long>((d + 4) * static_cast<int>(a.size()));
        rep.entries.push_back({"general_effective_khovanskii",
                               base >= 1 ? pow_int(base, exp) : Int(1), true, false});
    }
    // simplex bound (d+1)! vol - (d+1)(l - d) + 1 = (d+1) nvol - (d+1)(l-d) + 1
    if (simplex && full_rank) {
        Int nvol = normalized_volume(a);
        Int v = Int(d + 1) * nvol - Int(d + 1) * (ell - d) + 1;
        rep.entries.push_back({"simplex_effective_bound", v, true, false});
    } else {
        rep.entries.push_back({"simplex_effective_bound", 0, false, false});
    }
    // d = 1, |A| >= 3, gcd 1: N_Kh <= w - 1
    if (d == 1 && a.size() >= 3) {
        Int g = 0;
        for (const Point& p : a) g = gcd_int(g, p[0] - a[0][0]);
        rep.entries.push_back({"one_dim_width_bound", w - 1, g == 1, false});
    } else {
        rep.entries.push_back({"one_dim_width_bound", 0, false, false});
    }
    // |A| = d + 2, simplex hull, Lambda_{A-A} = Z^d: exact N_Kh = d! vol - d - 1
    {
        bool applies = full_rank && simplex && static_cast<int>(a.size()) == d + 2;
        if (applies) {
            IntegerLattice diff = difference_lattice(a);
            applies = diff.rank() == d && diff.pivot_product() == 1;
        }
        Int v = 0;
        if (applies) v = normalized_volume(a) - d - 1;
        rep.entries.push_back({"cg_exact_onset", v, applies, true});
    }
    // triple sets {0,a,b}, gcd(a,b)=1: exact N_Kh = max(1, b-2)
    if (d == 1 && a.size() == 3) {
        Int g = 0;
        for (const Point& p : a) g = gcd_int(g, p[0] - a[0][0]);
        Int b = w;
        rep.entries.push_back({"triple_exact_onset", std::max(Int(1), Int(b - 2)), g == 1, true});
    } else {
        rep.entries.push_back({"triple_exact_onset", 0, false, true});
    }
    return rep;
}

Int minmax_inclusion_exclusion(const std::vector<Int>& values) {
    std::size_t k = values.size();
    if (k == 0 || k >= 63) throw UsageError("minmax identity: need 1..62 values");
    Int total = 0;
    for (uint64_t mask = 1; mask < (1ull << k); ++mask) {
        Int mx;
        bool first = true;
        for (std::size_t j = 0; j < k; ++j) {
            if (!(mask & (1ull << j))) continue;
            if (first || values[j] > mx) mx = values[j];
            first = false;
        }
        total += (__builtin_popcountll(mask) % 2 == 1) ? Int(-mx) : mx;
    }
    return total;
}

}  // namespace sumsetlab
