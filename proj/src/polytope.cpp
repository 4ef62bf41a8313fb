#include "sumsetlab/polytope.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace sumsetlab {

namespace {

using linalg::IntMat;

struct SpanData {
    Point base;
    IntMat diffs;       // a_i - a_0, all of them
    IntMat perp;        // integer basis of span(diffs)^perp
    int r = 0;          // dim span
};

SpanData span_data(const PointSet& a) {
    if (a.empty()) throw UsageError("empty point set");
    SpanData s;
    s.base = a[0];
    for (std::size_t i = 1; i < a.size(); ++i) s.diffs.push_back(sub(a[i], s.base));
    if (s.diffs.empty()) {
        s.r = 0;
        for (int j = 0; j < a.dim(); ++j) {
            Point e = zero_point(a.dim());
            e[static_cast<std::size_t>(j)] = 1;
            s.perp.push_back(std::move(e));
        }
        return s;
    }
    s.r = linalg::rank(s.diffs);
    s.perp = linalg::kernel_basis(s.diffs);
    return s;
}

bool in_span(const SpanData& s, const Point& v) {
    for (const Point& p : s.perp)
        if (dot(p, v) != 0) return false;
    return true;
}

// all subsets of {0..n-1} of size k, lexicographic
void for_each_subset(std::size_t n, std::size_t k,
                     const std::function<void(const std::vector<std::size_t>&)>& f) {
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    if (k > n) return;
    while (true) {
        f(idx);
        if (k == 0) return;
        std::size_t pos = k;
        while (pos > 0 && idx[pos - 1] == n - k + pos - 1) --pos;
        if (pos == 0) return;
        ++idx[pos - 1];
        for (std::size_t i = pos; i < k; ++i) idx[i] = idx[i - 1] + 1;
    }
}

// The unique (up to sign) primitive integer vector orthogonal to the rows
// and lying in the span (rows must leave a 1-dimensional kernel together
// with the perp basis).
std::optional<Point> hyperplane_normal(const IntMat& rows, const SpanData& s, int ambient_dim) {
    IntMat m = rows;
    for (const Point& p : s.perp) m.push_back(p);
    if (m.empty()) {
        // no constraints at all: only ambient dimension 1 leaves a line
        if (ambient_dim != 1) return std::nullopt;
        return Point{Int(1)};
    }
    IntMat kernel = linalg::kernel_basis(m);
    if (kernel.size() != 1) return std::nullopt;
    return primitive(kernel[0]);
}

}  // namespace

bool PolytopeDescription::contains(const Point& x) const {
    Point v = sub(x, base);
    for (const Point& p : perp_basis)
        if (dot(p, v) != 0) return false;
    for (const Facet& f : facets)
        if (Rat(dot(f.normal, x)) < f.offset) return false;
    return true;
}

bool PolytopeDescription::contains_rational(const std::vector<Rat>& x) const {
    if (static_cast<int>(x.size()) != static_cast<int>(base.size()))
        throw UsageError("dimension mismatch");
    auto rat_dot = [&](const Point& n) {
        Rat s = 0;
        for (std::size_t i = 0; i < x.size(); ++i) s += Rat(n[i]) * x[i];
        return s;
    };
    for (const Point& p : perp_basis) {
        Rat s = rat_dot(p);
        for (std::size_t i = 0; i < x.size(); ++i) s -= Rat(p[i]) * Rat(base[i]);
        if (s != 0) return false;
    }
    for (const Facet& f : facets)
        if (rat_dot(f.normal) < f.offset) return false;
    return true;
}

bool ConeDescription::contains(const Point& x) const {
    for (const Point& p : perp_basis)
        if (dot(p, x) != 0) return false;
    for (const Point& n : normals)
        if (dot(n, x) < 0) return false;
    return true;
}

PolytopeDescription convex_hull(const PointSet& a) {
    SpanData s = span_data(a);
    PolytopeDescription out;
    out.affine_dim = s.r;
    out.base = s.base;
    out.perp_basis = s.perp;
    // pick an independent subset of diffs as the span basis
    {
        IntMat chosen;
        for (const Point& d : s.diffs) {
            chosen.push_back(d);
            if (linalg::rank(chosen) < static_cast<int>(chosen.size())) chosen.pop_back();
            if (static_cast<int>(chosen.size()) == s.r) break;
        }
        out.span_basis = chosen;
    }
    if (s.r == 0) {
        out.vertices = a;
        return out;
    }

    const auto& pts = a.points();
    std::set<Facet> facets;
    std::size_t k = static_cast<std::size_t>(s.r);  // r points span an (r-1)-dim hyperplane
    for_each_subset(pts.size(), k, [&](const std::vector<std::size_t>& idx) {
        IntMat rows;
        for (std::size_t i = 1; i < idx.size(); ++i)
            rows.push_back(sub(pts[idx[i]], pts[idx[0]]));
        auto n = hyperplane_normal(rows, s, a.dim());
        if (!n) return;
        Int c = dot(*n, pts[idx[0]]);
        bool above = true, below = true;
        for (const Point& p : pts) {
            Int v = dot(*n, p);
            if (v < c) above = false;
            if (v > c) below = false;
            if (!above && !below) return;
        }
        if (above)
            facets.insert(Facet{*n, Rat(c)});
        else if (below)
            facets.insert(Facet{neg(*n), Rat(-c)});
    });
    out.facets.assign(facets.begin(), facets.end());

    // a point is extremal iff its active facet normals span the full
    // affine-span dimension
    std::vector<Point> verts;
    for (const Point& p : pts) {
        IntMat active;
        for (const Facet& f : out.facets)
            if (Rat(dot(f.normal, p)) == f.offset) active.push_back(f.normal);
        if (linalg::rank(active) == s.r) verts.push_back(p);
    }
    out.vertices = PointSet(a.dim(), std::move(verts));
    return out;
}

ConeDescription cone_of(const PointSet& a) {
    if (!a.contains(zero_point(a.dim())))
        throw UsageError("cone_of: 0 must be an element of A (translate first)");
    SpanData s = span_data(a);
    ConeDescription out;
    out.spanning_dim = s.r;
    out.perp_basis = s.perp;
    {
        IntMat chosen;
        for (const Point& d : s.diffs) {
            chosen.push_back(d);
            if (linalg::rank(chosen) < static_cast<int>(chosen.size())) chosen.pop_back();
            if (static_cast<int>(chosen.size()) == s.r) break;
        }
        out.span_basis = chosen;
    }
    if (s.r == 0) return out;

    std::vector<Point> gens;
    for (const Point& p : a)
        if (!is_zero(p)) gens.push_back(p);

    std::set<Point> normals;
    std::size_t k = static_cast<std::size_t>(s.r - 1);
    for_each_subset(gens.size(), k, [&](const std::vector<std::size_t>& idx) {
        IntMat rows;
        for (std::size_t i : idx) rows.push_back(gens[i]);
        auto n = hyperplane_normal(rows, s, a.dim());
        if (!n) return;
        bool above = true, below = true;
        for (const Point& g : gens) {
            Int v = dot(*n, g);
            if (v < 0) above = false;
            if (v > 0) below = false;
            if (!above && !below) return;
        }
        if (above)
            normals.insert(*n);
        else if (below)
            normals.insert(neg(*n));
    });
    out.normals.assign(normals.begin(), normals.end());
    return out;
}

std::optional<PointSet> is_simplex(const PointSet& a) {
    if (a.empty()) return std::nullopt;
    PolytopeDescription h = convex_hull(a);
    if (static_cast<int>(h.vertices.size()) == h.affine_dim + 1) return h.vertices;
    return std::nullopt;
}

linalg::IntMat saturated_span_basis(const PointSet& a) {
    SpanData s = span_data(a);
    if (s.r == 0) return {};
    if (s.perp.empty()) {
        IntMat id;
        for (int j = 0; j < a.dim(); ++j) {
            Point e = zero_point(a.dim());
            e[static_cast<std::size_t>(j)] = 1;
            id.push_back(std::move(e));
        }
        return id;
    }
    return linalg::kernel_basis(s.perp);
}

namespace {

// recursive triangulation of a hull into affine-dim simplices
void triangulate(const PointSet& pts, std::vector<std::vector<Point>>& out) {
    PolytopeDescription h = convex_hull(pts);
    if (h.affine_dim == 0) {
        out.push_back({pts[0]});
        return;
    }
    const Point& v0 = h.vertices[0];
    for (const Facet& f : h.facets) {
        if (Rat(dot(f.normal, v0)) == f.offset) continue;  // v0 on this facet
        std::vector<Point> fverts;
        for (const Point& v : h.vertices)
            if (Rat(dot(f.normal, v)) == f.offset) fverts.push_back(v);
        std::vector<std::vector<Point>> sub;
        triangulate(PointSet(pts.dim(), std::move(fverts)), sub);
        for (auto& simplex : sub) {
            simplex.push_back(v0);
            out.push_back(std::move(simplex));
        }
    }
}

}  // namespace

Int normalized_volume(const PointSet& a) {
    PolytopeDescription h = convex_hull(a);
    int r = h.affine_dim;
    if (r == 0) return 1;
    IntMat span = saturated_span_basis(a);
    IntegerLattice lspan = hermite_normal_form(span, a.dim());

    // vertices in saturated-span coordinates (exact integers)
    std::vector<Point> coords;
    for (const Point& v : h.vertices) {
        auto c = lspan.coordinates(sub(v, h.base));
        if (!c) throw std::logic_error("vertex difference escaped the span lattice");
        coords.push_back(std::move(*c));
    }
    std::vector<std::vector<Point>> simplices;
    triangulate(PointSet(r, std::move(coords)), simplices);

    Int vol = 0;
    for (const auto& simplex : simplices) {
        if (static_cast<int>(simplex.size()) != r + 1)
            throw std::logic_error("triangulation produced a degenerate simplex");
        IntMat m;
        for (std::size_t i = 1; i < simplex.size(); ++i)
            m.push_back(sub(simplex[i], simplex[0]));
        vol += abs_int(linalg::determinant(m));
    }
    return vol;
}

namespace {

// barycentric membership of a rational point in a simplex given in r-dim coords
bool simplex_contains(const std::vector<Point>& simplex, const std::vector<Rat>& y) {
    std::size_t r = y.size();
    linalg::RatMat m(r + 1, linalg::RatVec(simplex.size(), Rat(0)));
    linalg::RatVec rhs(r + 1, Rat(0));
    for (std::size_t j = 0; j < simplex.size(); ++j) {
        for (std::size_t i = 0; i < r; ++i) m[i][j] = Rat(simplex[j][i]);
        m[r][j] = 1;
    }
    for (std::size_t i = 0; i < r; ++i) rhs[i] = y[i];
    rhs[r] = 1;
    auto sol = linalg::solve_rational_rat(m, rhs);
    if (!sol) return false;
    for (const Rat& l : *sol)
        if (l < 0) return false;
    return true;
}

}  // namespace

std::vector<PointSet> caratheodory_cover(const PointSet& a) {
    PolytopeDescription h = convex_hull(a);
    int r = h.affine_dim;
    if (r == 0) return {h.vertices};

    IntegerLattice lspan = hermite_normal_form(saturated_span_basis(a), a.dim());
    auto to_coords = [&](const Point& p) {
        auto c = lspan.coordinates(sub(p, h.base));
        if (!c) throw std::logic_error("point escaped span lattice");
        return *c;
    };
    std::vector<Point> vcoords;
    for (const Point& v : h.vertices) vcoords.push_back(to_coords(v));
    PolytopeDescription hull2 = convex_hull(PointSet(r, vcoords));

    // half-integer sample grid of the hull, in span coordinates
    std::vector<std::vector<Rat>> grid;
    {
        Point lo = vcoords[0], hi = vcoords[0];
        for (const Point& v : vcoords)
            for (std::size_t i = 0; i < v.size(); ++i) {
                lo[i] = std::min(lo[i], v[i]);
                hi[i] = std::max(hi[i], v[i]);
            }
        std::vector<Int> cur(static_cast<std::size_t>(r));
        std::vector<Int> lo2(static_cast<std::size_t>(r)), hi2(static_cast<std::size_t>(r));
        for (std::size_t i = 0; i < cur.size(); ++i) {
            lo2[i] = 2 * lo[i];
            hi2[i] = 2 * hi[i];
            cur[i] = lo2[i];
        }
        while (true) {
            std::vector<Rat> y(cur.size());
            for (std::size_t i = 0; i < cur.size(); ++i) y[i] = Rat(cur[i], Int(2));
            if (hull2.contains_rational(y)) grid.push_back(y);
            std::size_t pos = 0;
            while (pos < cur.size() && cur[pos] == hi2[pos]) {
                cur[pos] = lo2[pos];
                ++pos;
            }
            if (pos == cur.size()) break;
            ++cur[pos];
        }
    }

    // candidate simplices: (r+1)-subsets of the vertices, full affine rank
    std::vector<std::vector<std::size_t>> candidates;
    for_each_subset(h.vertices.size(), static_cast<std::size_t>(r + 1),
                    [&](const std::vector<std::size_t>& idx) {
                        linalg::IntMat rows;
                        for (std::size_t i = 1; i < idx.size(); ++i)
                            rows.push_back(sub(vcoords[idx[i]], vcoords[idx[0]]));
                        if (linalg::rank(rows) == r) candidates.push_back(idx);
                    });

    // greedy set cover: repeatedly take the simplex covering the most
    // uncovered samples (ties resolved by candidate order)
    std::vector<std::vector<bool>> hits(candidates.size(), std::vector<bool>(grid.size()));
    for (std::size_t c = 0; c < candidates.size(); ++c) {
        std::vector<Point> simplex_coords;
        for (std::size_t i : candidates[c]) simplex_coords.push_back(vcoords[i]);
        for (std::size_t g = 0; g < grid.size(); ++g)
            hits[c][g] = simplex_contains(simplex_coords, grid[g]);
    }
    std::vector<bool> covered(grid.size(), false);
    std::size_t remaining = grid.size();
    std::vector<PointSet> cover;
    while (remaining > 0) {
        std::size_t best = candidates.size(), best_gain = 0;
        for (std::size_t c = 0; c < candidates.size(); ++c) {
            std::size_t gain = 0;
            for (std::size_t g = 0; g < grid.size(); ++g)
                if (!covered[g] && hits[c][g]) ++gain;
            if (gain > best_gain) {
                best_gain = gain;
                best = c;
            }
        }
        if (best == candidates.size())
            throw std::logic_error("caratheodory_cover: sample grid not covered");
        for (std::size_t g = 0; g < grid.size(); ++g)
            if (hits[best][g] && !covered[g]) {
                covered[g] = true;
                --remaining;
            }
        std::vector<Point> simplex_pts;
        for (std::size_t i : candidates[best]) simplex_pts.push_back(h.vertices[i]);
        cover.push_back(PointSet(a.dim(), std::move(simplex_pts)));
    }
    return cover;
}

PointSet polytope_lattice_points(const PolytopeDescription& p, const Int& n,
                                 const IntegerLattice& l, const Point& shift,
                                 const EnumerationBudget& budget) {
    if (n < 0) throw UsageError("polytope_lattice_points: negative scale");
    if (p.vertices.empty()) throw UsageError("polytope_lattice_points: unbounded region");
    int d = p.vertices.dim();
    if (l.ambient_dim() != d || static_cast<int>(shift.size()) != d)
        throw UsageError("polytope_lattice_points: dimension mismatch");

    Point lo = scale(n, p.vertices[0]), hi = lo;
    for (const Point& v : p.vertices) {
        Point w = scale(n, v);
        for (int i = 0; i < d; ++i) {
            lo[static_cast<std::size_t>(i)] = std::min(lo[static_cast<std::size_t>(i)], w[static_cast<std::size_t>(i)]);
            hi[static_cast<std::size_t>(i)] = std::max(hi[static_cast<std::size_t>(i)], w[static_cast<std::size_t>(i)]);
        }
    }
    Int cells = 1;
    for (int i = 0; i < d; ++i) {
        cells *= hi[static_cast<std::size_t>(i)] - lo[static_cast<std::size_t>(i)] + 1;
        if (cells > Int(budget.max_points))
            throw BudgetError("polytope_lattice_points: bounding box exceeds point budget",
                              budget.max_points);
    }

    Point nbase = scale(n, p.base);
    std::vector<Rat> scaled_offsets;
    scaled_offsets.reserve(p.facets.size());
    for (const Facet& f : p.facets) scaled_offsets.push_back(Rat(n) * f.offset);
    std::vector<Point> result;
    Point cur = lo;
    while (true) {
        // membership in n*P
        bool ok = true;
        Point v = sub(cur, nbase);
        for (const Point& q : p.perp_basis)
            if (dot(q, v) != 0) { ok = false; break; }
        if (ok) {
            for (std::size_t fi = 0; fi < p.facets.size(); ++fi)
                if (Rat(dot(p.facets[fi].normal, cur)) < scaled_offsets[fi]) { ok = false; break; }
        }
        if (ok && l.contains(sub(cur, shift))) {
            result.push_back(cur);
            if (result.size() > budget.max_points)
                throw BudgetError("polytope_lattice_points: result exceeds point budget",
                                  budget.max_points);
        }
        int pos = 0;
        while (pos < d && cur[static_cast<std::size_t>(pos)] == hi[static_cast<std::size_t>(pos)]) {
            cur[static_cast<std::size_t>(pos)] = lo[static_cast<std::size_t>(pos)];
            ++pos;
        }
        if (pos == d) break;
        ++cur[static_cast<std::size_t>(pos)];
    }
    return PointSet(d, std::move(result));
}

}  // namespace sumsetlab
