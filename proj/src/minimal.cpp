#include "sumsetlab/minimal.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <unordered_map>

namespace sumsetlab {

bool BMinimalFamily::contains(const Point& p) const {
    return std::binary_search(elements.begin(), elements.end(),
                              BMinimalElement{p, 0});
}

BMinimalFamily b_minimal_elements(const PointSet& a, const PointSet& b, int cap,
                                  const EnumerationBudget& budget) {
    if (a.empty()) throw UsageError("b_minimal_elements: empty A");
    Point zero = zero_point(a.dim());
    for (const Point& p : b)
        if (!a.contains(p)) throw UsageError("b_minimal_elements: B ∪ {0} must sit inside A");
    if (!a.contains(zero)) throw UsageError("b_minimal_elements: 0 must be in A");
    if (cap < 1) throw UsageError("b_minimal_elements: cap must be >= 1");

    struct Info {
        int level;
        bool some_min_rep_uses_b;
    };
    std::map<Point, Info> reached;
    reached[zero] = {0, false};

    std::vector<Point> steps;  // A \ {0}
    for (const Point& p : a)
        if (!is_zero(p)) steps.push_back(p);

    BMinimalFamily fam;
    fam.basis_b = b;
    fam.elements.push_back({zero, 0});

    std::vector<Point> layer{zero};
    for (int n = 1; n <= cap; ++n) {
        std::map<Point, bool> next;  // point -> some minimal rep uses B
        for (const Point& u : layer) {
            bool u_uses = reached[u].some_min_rep_uses_b;
            for (const Point& s : steps) {
                Point v = add(u, s);
                auto it = reached.find(v);
                if (it != reached.end()) continue;  // shorter representation exists
                bool uses = u_uses || b.contains(s);
                auto [nit, fresh] = next.emplace(v, uses);
                if (!fresh) nit->second = nit->second || uses;
            }
        }
        if (reached.size() + next.size() > budget.max_points)
            throw BudgetError("b_minimal_elements: point budget exceeded", budget.max_points);
        bool found_candidate = false;
        layer.clear();
        for (auto& [v, uses] : next) {
            reached[v] = {n, uses};
            layer.push_back(v);
            if (!uses) {
                fam.elements.push_back({v, n});
                found_candidate = true;
            }
        }
        fam.layers_explored = n;
        if (!found_candidate) {
            fam.complete = true;
            break;
        }
    }
    std::sort(fam.elements.begin(), fam.elements.end());
    return fam;
}

int K_of(const BMinimalFamily& family) {
    if (!family.complete)
        throw UsageError("K(A,B) requires a complete (certified) B-minimal family");
    int k = 0;
    for (const auto& e : family.elements) k = std::max(k, e.rep_length);
    return k;
}

int K_of(const PointSet& a, const PointSet& b, int cap, const EnumerationBudget& budget) {
    return K_of(b_minimal_elements(a, b, cap, budget));
}

namespace {

struct SmallGroup {
    unsigned order = 1;
    std::vector<std::vector<unsigned>> add;
};

SmallGroup small_group(const FiniteAbelianGroup& g) {
    if (g.order() > 64) {
        double m = static_cast<double>(g.max_element_order());
        double bound = m + std::log(static_cast<double>(g.order()));
        throw BudgetError("group order exceeds the exact-search budget; Davenport bound "
                          "m(1+log|G|/m) = " + std::to_string(bound),
                          64);
    }
    SmallGroup s;
    s.order = static_cast<unsigned>(g.order());
    s.add.assign(s.order, std::vector<unsigned>(s.order));
    for (unsigned i = 0; i < s.order; ++i)
        for (unsigned j = 0; j < s.order; ++j)
            s.add[i][j] = static_cast<unsigned>(g.add_indices(i, j));
    return s;
}

// DFS over subsum states. The state of a partial sequence is the bitmask of
// its nonempty subsums; it determines every legal continuation, so states
// memoize cleanly. Each extension strictly grows the state (a fixed state
// would force a zero subsum), hence depth <= |G| - 1.
struct ZeroSumSearch {
    const SmallGroup& g;
    unsigned long long nodes = 0;
    unsigned long long node_budget;
    std::unordered_map<uint64_t, int> memo;
    std::vector<unsigned> alphabet;  // all of G\{0} for D(G); H for k(G,H)
    uint64_t h_mask = 0;
    bool restrict_h = false;

    explicit ZeroSumSearch(const SmallGroup& grp, unsigned long long nb)
        : g(grp), node_budget(nb) {}

    // subsums gained by appending h that extend an existing one: t + h
    uint64_t shifted(uint64_t t, unsigned h) const {
        uint64_t s = 0;
        for (unsigned e = 1; e < g.order; ++e)
            if (t & (1ull << e)) s |= 1ull << g.add[e][h];
        return s;
    }

    int longest(uint64_t t) {
        auto it = memo.find(t);
        if (it != memo.end()) return it->second;
        if (++nodes > node_budget)
            throw BudgetError("zero-sum search exceeded node budget", node_budget);
        int best = 0;
        for (unsigned h : alphabet) {
            uint64_t plus = shifted(t, h);
            if (plus & 1ull) continue;  // a zero subsum would appear
            if (restrict_h && (plus & h_mask)) continue;  // length->1 subsum lands in H
            best = std::max(best, 1 + longest(t | (1ull << h) | plus));
        }
        memo[t] = best;
        return best;
    }
};

}  // namespace

int davenport_constant(const FiniteAbelianGroup& g, const EnumerationBudget& budget) {
    if (g.order() == 1) return 1;
    SmallGroup sg = small_group(g);
    ZeroSumSearch search(sg, budget.max_nodes);
    for (unsigned e = 1; e < sg.order; ++e) search.alphabet.push_back(e);
    return 1 + search.longest(0);
}

int k_constant(const FiniteAbelianGroup& g, const std::vector<std::vector<Int>>& h_residues,
               const EnumerationBudget& budget) {
    SmallGroup sg = small_group(g);
    ZeroSumSearch search(sg, budget.max_nodes);
    search.restrict_h = true;
    for (const auto& r : h_residues) {
        unsigned long long idx = g.index_of(r);
        if (idx == 0) throw UsageError("k_constant: 0 must not lie in H");
        if ((search.h_mask >> idx) & 1ull) continue;
        search.h_mask |= 1ull << idx;
        search.alphabet.push_back(static_cast<unsigned>(idx));
    }
    return search.longest(0);
}

namespace {

// lexicographically ordered enumeration of x in Z_{>=0}^len with sum M
void for_each_composition(int len, const Int& m,
                          const std::function<void(const std::vector<Int>&)>& f) {
    std::vector<Int> x(static_cast<std::size_t>(len), Int(0));
    std::function<void(int, Int)> rec = [&](int pos, Int rest) {
        if (pos == len - 1) {
            x[static_cast<std::size_t>(pos)] = rest;
            f(x);
            return;
        }
        for (Int v = 0; v <= rest; ++v) {
            x[static_cast<std::size_t>(pos)] = v;
            rec(pos + 1, rest - v);
        }
    };
    if (len == 0) return;
    rec(0, m);
}

}  // namespace

UselessFamily minimal_useless(const PointSet& a, int norm_cap, const EnumerationBudget& budget) {
    if (a.empty()) throw UsageError("minimal_useless: empty A");
    if (norm_cap < 0) throw UsageError("minimal_useless: negative cap");
    const auto& pts = a.points();
    int ell = static_cast<int>(pts.size());

    UselessFamily fam;
    fam.instance = a;
    fam.cap_used = norm_cap;

    // lex-min representative of every (length, value) class up to length
    // ell * cap; a vector is useless iff it is not its class representative
    Int m_max = Int(ell) * Int(norm_cap);
    std::map<std::pair<Int, Point>, std::vector<Int>> lexmin;
    unsigned long long enumerated = 0;
    for (Int m = 0; m <= m_max; ++m) {
        for_each_composition(ell, m, [&](const std::vector<Int>& x) {
            if (++enumerated > budget.max_nodes)
                throw BudgetError("minimal_useless: composition budget exceeded",
                                  budget.max_nodes);
            Point value = zero_point(a.dim());
            for (int j = 0; j < ell; ++j)
                if (x[static_cast<std::size_t>(j)] != 0)
                    value = add(value, scale(x[static_cast<std::size_t>(j)],
                                             pts[static_cast<std::size_t>(j)]));
            lexmin.emplace(std::make_pair(m, std::move(value)), x);  // first hit is lex-min
        });
    }

    // graded scan of the cap box; skip anything dominating a known member
    std::vector<std::vector<Int>> box;
    {
        std::vector<Int> x(static_cast<std::size_t>(ell), Int(0));
        std::function<void(int)> rec = [&](int pos) {
            if (pos == ell) {
                box.push_back(x);
                return;
            }
            for (Int v = 0; v <= norm_cap; ++v) {
                x[static_cast<std::size_t>(pos)] = v;
                rec(pos + 1);
            }
        };
        rec(0);
        std::sort(box.begin(), box.end(), [](const auto& p, const auto& q) {
            Int sp = 0, sq = 0;
            for (const Int& v : p) sp += v;
            for (const Int& v : q) sq += v;
            if (sp != sq) return sp < sq;
            return p < q;
        });
    }
    auto dominates_member = [&](const std::vector<Int>& x) {
        for (const auto& mem : fam.members) {
            bool ge = true;
            for (int j = 0; j < ell; ++j)
                if (x[static_cast<std::size_t>(j)] < mem.exponents[static_cast<std::size_t>(j)]) {
                    ge = false;
                    break;
                }
            if (ge) return true;
        }
        return false;
    };
    for (const auto& x : box) {
        if (dominates_member(x)) continue;
        Int m = 0;
        Point value = zero_point(a.dim());
        for (int j = 0; j < ell; ++j) {
            m += x[static_cast<std::size_t>(j)];
            if (x[static_cast<std::size_t>(j)] != 0)
                value = add(value, scale(x[static_cast<std::size_t>(j)],
                                         pts[static_cast<std::size_t>(j)]));
        }
        const auto& rep = lexmin.at(std::make_pair(m, value));
        if (rep != x) fam.members.push_back(UselessVector{x, rep});
    }

    // cap-and-verify: the truncated-binomial counts must reproduce |NA| on
    // a window just past the largest member norm
    int r = 0;
    {
        linalg::IntMat diffs;
        for (std::size_t i = 1; i < pts.size(); ++i) diffs.push_back(sub(pts[i], pts[0]));
        r = diffs.empty() ? 0 : linalg::rank(diffs);
    }
    if (fam.members.size() <= 62) {
        std::vector<Int> ustar(static_cast<std::size_t>(ell), Int(0));
        for (const auto& mem : fam.members)
            for (int j = 0; j < ell; ++j)
                ustar[static_cast<std::size_t>(j)] =
                    std::max(ustar[static_cast<std::size_t>(j)],
                             mem.exponents[static_cast<std::size_t>(j)]);
        Int start = 0;
        for (const Int& v : ustar) start += v;
        if (start < 1) start = 1;
        Int stop = start + r + 1;
        bool ok = true;
        try {
            int n_hi = static_cast<int>(stop);
            GrowthTable t = growth_table(a, n_hi, budget);
            for (Int n = start; n <= stop && ok; ++n)
                ok = (useless_count_at(fam, n, budget) == t.size_at(static_cast<int>(n)));
        } catch (const BudgetError&) {
            ok = false;
        }
        fam.certified = ok;
    }
    return fam;
}

Int useless_count_at(const UselessFamily& family, const Int& n, const EnumerationBudget& budget) {
    std::size_t k = family.members.size();
    int ell = static_cast<int>(family.instance.size());
    if (k >= 63 || (1ull << k) > budget.max_nodes)
        throw BudgetError("useless_count_at: 2^|U_min| exceeds the subset budget",
                          budget.max_nodes);
    Int total = 0;
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
        Int term = binomial_count(n - norm1 + ell - 1, static_cast<unsigned>(ell - 1));
        if (__builtin_popcountll(mask) % 2 == 0)
            total += term;
        else
            total -= term;
    }
    return total;
}

}  // namespace sumsetlab
