#include "sumsetlab/solve.hpp"

#include <algorithm>
#include <functional>

#include "sumsetlab/polytope.hpp"
#include "sumsetlab/sumset.hpp"

namespace sumsetlab {

Int IntegerMatrix::max_abs_entry() const {
    Int k = 1;
    for (const auto& row : entries)
        for (const Int& e : row) k = std::max(k, abs_int(e));
    return k;
}

std::vector<Int> IntegerMatrix::apply(const std::vector<Int>& x) const {
    if (static_cast<int>(x.size()) != cols()) throw UsageError("matrix apply: size mismatch");
    std::vector<Int> r(entries.size(), Int(0));
    for (std::size_t i = 0; i < entries.size(); ++i)
        for (std::size_t j = 0; j < x.size(); ++j) r[i] += entries[i][j] * x[j];
    return r;
}

Int small_kernel_bound(int m, int n, const Int& k) {
    return pow_int(k * n, static_cast<unsigned long>(m));
}

Int corollary_positive_bound(int m, int n, const Int& k1, const Int& k2) {
    if (m < 1) throw UsageError("corollary_positive_bound: need m >= 1");
    unsigned long mu = static_cast<unsigned long>(m);
    return Int(2) * pow_int(Int(n), mu + 1) * pow_int(Int(m), mu) * pow_int(k1, 2 * mu) +
           pow_int(Int(m), mu) * pow_int(k1, mu - 1) * k2;
}

Int minimal_solution_bound(int m, int n, const Int& k1, const Int& k2) {
    unsigned long mu = static_cast<unsigned long>(m);
    unsigned long nu = static_cast<unsigned long>(n);
    return pow_int(Int(2), 2 * nu) * pow_int(Int(m), mu * nu) *
               pow_int(k1, mu * (nu + 3)) * pow_int(Int(n), mu + 1) +
           pow_int(Int(2), nu) * pow_int(Int(m), mu * nu) * pow_int(k1, mu * nu) * k2;
}

Point small_kernel_vector(const IntegerMatrix& m) {
    if (m.cols() <= m.rows()) throw UsageError("small_kernel_vector requires n > m");
    bool nonzero = false;
    for (const auto& row : m.entries)
        for (const Int& e : row)
            if (e != 0) nonzero = true;
    if (!nonzero) throw UsageError("small_kernel_vector requires a nonzero matrix");

    linalg::IntMat kernel = linalg::kernel_basis(m.entries);
    if (kernel.empty()) throw std::logic_error("n > m matrix with trivial kernel");
    Point best = kernel.front();
    for (const auto& v : kernel)
        if (sup_norm(v) < sup_norm(best)) best = v;
    best = primitive(best);
    for (const Int& c : best) {
        if (c > 0) break;
        if (c < 0) { best = neg(best); break; }
    }
    for (const Int& r : m.apply(best))
        if (r != 0) throw std::logic_error("kernel vector fails M X = 0");
    Int bound = small_kernel_bound(m.rows(), m.cols(), m.max_abs_entry());
    if (sup_norm(best) > bound)
        throw BoundViolationError("small kernel vector exceeds (Kn)^m");
    return best;
}

KernelBasisResult bounded_kernel_basis(const IntegerMatrix& m) {
    if (m.cols() < m.rows()) throw UsageError("bounded_kernel_basis requires n >= m");
    KernelBasisResult out;
    out.basis = linalg::kernel_basis(m.entries);
    int r = linalg::rank(m.entries);
    if (static_cast<int>(out.basis.size()) != m.cols() - r)
        throw std::logic_error("kernel dimension mismatch");
    out.norm_product = 1;
    for (const auto& v : out.basis) {
        for (const Int& e : m.apply(v))
            if (e != 0) throw std::logic_error("kernel basis vector fails M X = 0");
        out.norm_product *= sup_norm(v);
    }
    // squared comparison avoids the square root:
    // (prod ||X_j||)^2 <= r! n^r K^{2r}
    Int k = m.max_abs_entry();
    unsigned long ru = static_cast<unsigned long>(r);
    Int rhs = factorial(static_cast<unsigned>(r)) * pow_int(Int(m.cols()), ru) *
              pow_int(k, 2 * ru);
    out.bound_holds = out.norm_product * out.norm_product <= rhs;
    return out;
}

namespace {

// rows forming a maximal independent subset, preferring earlier rows
std::vector<std::size_t> independent_rows(const linalg::IntMat& m) {
    std::vector<std::size_t> keep;
    linalg::IntMat acc;
    for (std::size_t i = 0; i < m.size(); ++i) {
        acc.push_back(m[i]);
        if (linalg::rank(acc) == static_cast<int>(acc.size()))
            keep.push_back(i);
        else
            acc.pop_back();
    }
    return keep;
}

std::vector<Int> positive_solution_rec(linalg::IntMat m, std::vector<Int> b,
                                       std::vector<Int> x) {
    // restrict to independent rows (consistency is inherited from x)
    auto keep = independent_rows(m);
    if (keep.size() != m.size()) {
        linalg::IntMat m2;
        std::vector<Int> b2;
        for (std::size_t i : keep) {
            m2.push_back(m[i]);
            b2.push_back(b[i]);
        }
        m = std::move(m2);
        b = std::move(b2);
    }
    std::size_t rows = m.size(), n = x.size();
    if (rows == 0) return std::vector<Int>(n, Int(1));
    if (n == rows) return x;  // square invertible: x is the unique solution

    IntegerMatrix im{m};
    Point kern = small_kernel_vector(im);
    bool has_positive = std::any_of(kern.begin(), kern.end(), [](const Int& c) { return c > 0; });
    if (!has_positive) kern = neg(kern);

    // slide the witness along the kernel until some positive-coordinate
    // entry drops into [1, ||X||_inf + 1]
    Int lambda;
    bool first = true;
    for (std::size_t i = 0; i < n; ++i) {
        if (kern[i] <= 0) continue;
        Int cand = floor_div(x[i] - 1, kern[i]);
        if (first || cand < lambda) { lambda = cand; first = false; }
    }
    if (lambda < 0) lambda = 0;
    std::size_t drop = SIZE_MAX;
    Int ksup = sup_norm(kern);
    for (std::size_t i = 0; i < n; ++i) {
        x[i] -= lambda * kern[i];
        if (x[i] < 1) throw std::logic_error("witness left the positive orthant");
    }
    for (std::size_t i = 0; i < n; ++i)
        if (kern[i] > 0 && x[i] <= ksup + 1) { drop = i; break; }
    if (drop == SIZE_MAX) throw std::logic_error("no coordinate available for removal");

    linalg::IntMat m_rest(rows);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (j != drop) m_rest[i].push_back(m[i][j]);
    std::vector<Int> b_rest(rows);
    for (std::size_t i = 0; i < rows; ++i) b_rest[i] = b[i] - m[i][drop] * x[drop];
    std::vector<Int> x_rest;
    for (std::size_t j = 0; j < n; ++j)
        if (j != drop) x_rest.push_back(x[j]);

    std::vector<Int> y_rest = positive_solution_rec(std::move(m_rest), std::move(b_rest),
                                                    std::move(x_rest));
    std::vector<Int> y;
    y.reserve(n);
    std::size_t t = 0;
    for (std::size_t j = 0; j < n; ++j)
        y.push_back(j == drop ? x[drop] : y_rest[t++]);
    return y;
}

}  // namespace

std::vector<Int> positive_solution(const IntegerMatrix& m, const std::vector<Int>& b,
                                   const std::vector<Int>& witness_x) {
    if (static_cast<int>(b.size()) != m.rows()) throw UsageError("positive_solution: bad rhs size");
    if (static_cast<int>(witness_x.size()) != m.cols())
        throw UsageError("positive_solution: bad witness size");
    for (const Int& v : witness_x)
        if (v < 1) throw UsageError("positive_solution: witness must be strictly positive");
    if (m.apply(witness_x) != b)
        throw UsageError("positive_solution: witness does not solve M x = b");

    std::vector<Int> y = positive_solution_rec(m.entries, b, witness_x);
    if (m.apply(y) != b) throw std::logic_error("positive solution fails M y = b");
    for (const Int& v : y)
        if (v < 1) throw std::logic_error("positive solution left the positive orthant");
    Int k1 = m.max_abs_entry();
    Int k2 = 1;
    for (const Int& v : b) k2 = std::max(k2, abs_int(v));
    Int bound = corollary_positive_bound(m.rows(), m.cols(), k1, k2);
    Int ysup = 0;
    for (const Int& v : y) ysup = std::max(ysup, v);
    if (ysup > bound)
        throw BoundViolationError("positive solution exceeds the Corollary 6.1 bound");
    return y;
}

namespace {

// particular integer solution of M y = c, plus integer kernel basis
struct IntegerSolveResult {
    bool solvable = false;
    std::vector<Int> particular;
    linalg::IntMat kernel;
};

IntegerSolveResult integer_solve(const IntegerMatrix& m, const std::vector<Int>& c) {
    IntegerSolveResult out;
    int n = m.cols();
    if (n == 0) {
        out.solvable = std::all_of(c.begin(), c.end(), [](const Int& v) { return v == 0; });
        return out;
    }
    // lattice generated by the columns, with transform back to y
    linalg::IntMat cols(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) {
        cols[static_cast<std::size_t>(j)].resize(m.entries.size());
        for (std::size_t i = 0; i < m.entries.size(); ++i)
            cols[static_cast<std::size_t>(j)][i] = m.entries[i][static_cast<std::size_t>(j)];
    }
    auto hnf = linalg::hermite_form_with_transform(cols, m.rows());
    auto t = linalg::hnf_coordinates(linalg::HnfResult{hnf.basis, hnf.pivots}, c);
    if (!t) return out;
    out.solvable = true;
    out.particular.assign(static_cast<std::size_t>(n), Int(0));
    for (std::size_t i = 0; i < t->size(); ++i)
        for (int j = 0; j < n; ++j)
            out.particular[static_cast<std::size_t>(j)] +=
                (*t)[i] * hnf.transform[i][static_cast<std::size_t>(j)];
    out.kernel = linalg::kernel_basis(m.entries);
    return out;
}

// exact rational feasibility of { t : A t >= rhs } by Fourier-Motzkin
bool fm_feasible(std::vector<std::vector<Rat>> a, std::vector<Rat> rhs) {
    std::size_t vars = a.empty() ? 0 : a.front().size();
    for (std::size_t v = vars; v-- > 0;) {
        std::vector<std::vector<Rat>> lower, upper, rest;
        std::vector<Rat> lower_rhs, upper_rhs, rest_rhs;
        for (std::size_t i = 0; i < a.size(); ++i) {
            Rat cv = a[i][v];
            std::vector<Rat> row(a[i].begin(), a[i].begin() + static_cast<long>(v));
            if (cv > 0) {  // t_v >= (rhs - rest)/cv
                for (Rat& x : row) x /= cv;
                lower.push_back(std::move(row));
                lower_rhs.push_back(rhs[i] / cv);
            } else if (cv < 0) {
                for (Rat& x : row) x /= cv;
                upper.push_back(std::move(row));
                upper_rhs.push_back(rhs[i] / cv);
            } else {
                rest.push_back(std::move(row));
                rest_rhs.push_back(rhs[i]);
            }
        }
        std::vector<std::vector<Rat>> next = std::move(rest);
        std::vector<Rat> next_rhs = std::move(rest_rhs);
        for (std::size_t i = 0; i < lower.size(); ++i)
            for (std::size_t j = 0; j < upper.size(); ++j) {
                // lower_i <= t_v <= upper_j  =>  upper_j - lower_i >= 0
                std::vector<Rat> row(v);
                for (std::size_t kk = 0; kk < v; ++kk) row[kk] = lower[i][kk] - upper[j][kk];
                next.push_back(std::move(row));
                next_rhs.push_back(lower_rhs[i] - upper_rhs[j]);
            }
        a = std::move(next);
        rhs = std::move(next_rhs);
    }
    for (std::size_t i = 0; i < a.size(); ++i)
        if (rhs[i] > 0) return false;  // 0 >= rhs_i violated
    return true;
}

// is there a real kernel combination z >= 0 with z_j >= 1?
bool kernel_face_contains(const linalg::IntMat& kernel, std::size_t j) {
    if (kernel.empty()) return false;
    std::size_t n = kernel.front().size();
    std::size_t q = kernel.size();
    std::vector<std::vector<Rat>> a(n, std::vector<Rat>(q, Rat(0)));
    std::vector<Rat> rhs(n, Rat(0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < q; ++k) a[i][k] = Rat(kernel[k][i]);
    rhs[j] = 1;
    return fm_feasible(std::move(a), std::move(rhs));
}

}  // namespace

ExtensionResult positive_extension(const IntegerMatrix& m, const std::vector<Int>& c,
                                   const EnumerationBudget& budget) {
    int n = m.cols();
    if (static_cast<int>(c.size()) != m.rows()) throw UsageError("positive_extension: bad rhs");
    if (n == 0)
        return {std::all_of(c.begin(), c.end(), [](const Int& v) { return v == 0; }), {}};

    IntegerSolveResult base = integer_solve(m, c);
    if (!base.solvable) return {false, {}};
    if (base.kernel.empty()) {
        bool ok = std::all_of(base.particular.begin(), base.particular.end(),
                              [](const Int& v) { return v >= 1; });
        return {ok, ok ? base.particular : std::vector<Int>{}};
    }

    // pump support: coordinates reachable by nonnegative kernel directions
    std::vector<bool> pumpable(static_cast<std::size_t>(n), false);
    bool all_pumpable = true, any_pumpable = false;
    for (std::size_t j = 0; j < static_cast<std::size_t>(n); ++j) {
        pumpable[j] = kernel_face_contains(base.kernel, j);
        all_pumpable = all_pumpable && pumpable[j];
        any_pumpable = any_pumpable || pumpable[j];
    }

    if (all_pumpable) {
        // a strictly positive rational kernel vector exists; scale to an
        // integer one and lift the particular solution
        // find it by summing per-coordinate witnesses via a small LP-free
        // trick: t = sum of kernel rows often works; otherwise search
        // small combinations
        std::vector<Int> z = [&]() -> std::vector<Int> {
            std::size_t q = base.kernel.size();
            std::vector<int> coef(q, 0);
            std::function<std::optional<std::vector<Int>>(std::size_t)> rec =
                [&](std::size_t pos) -> std::optional<std::vector<Int>> {
                if (pos == q) {
                    std::vector<Int> cand(static_cast<std::size_t>(n), Int(0));
                    for (std::size_t k = 0; k < q; ++k)
                        for (std::size_t i = 0; i < cand.size(); ++i)
                            cand[i] += Int(coef[k]) * base.kernel[k][i];
                    for (const Int& v : cand)
                        if (v < 1) return std::nullopt;
                    return cand;
                }
                for (int v = -8; v <= 8; ++v) {
                    coef[pos] = v;
                    if (auto r = rec(pos + 1)) return r;
                }
                return std::nullopt;
            };
            auto r = rec(0);
            if (!r) throw BudgetError("positive_extension: positive kernel vector out of range", 8);
            return *r;
        }();
        std::vector<Int> y = base.particular;
        Int deficit = 0;
        for (const Int& v : y) deficit = std::min(deficit, Int(v - 1));
        // add enough of z (z >= 1 everywhere) to clear the deficit
        Int t = deficit < 0 ? Int(1 - deficit) : Int(0);
        for (std::size_t i = 0; i < y.size(); ++i) y[i] += t * z[i];
        while (std::any_of(y.begin(), y.end(), [](const Int& v) { return v < 1; }))
            for (std::size_t i = 0; i < y.size(); ++i) y[i] += z[i];
        return {true, y};
    }

    // columns outside the pump support must be found directly; inside it
    // they can be raised afterwards
    std::vector<std::size_t> hard;
    for (std::size_t j = 0; j < static_cast<std::size_t>(n); ++j)
        if (!pumpable[j]) hard.push_back(j);

    if (!any_pumpable) {
        // pointed case: monoid membership via the P(A) decider over the
        // column set
        std::vector<Point> gens;
        Point zero = zero_point(m.rows());
        gens.push_back(zero);
        std::vector<Int> shift(c.size(), Int(0));
        for (std::size_t j = 0; j < static_cast<std::size_t>(n); ++j) {
            Point col(m.rows());
            for (int i = 0; i < m.rows(); ++i)
                col[static_cast<std::size_t>(i)] = m.entries[static_cast<std::size_t>(i)][j];
            for (std::size_t i = 0; i < shift.size(); ++i) shift[i] += col[i];
            gens.push_back(col);
        }
        Point target(c.size());
        for (std::size_t i = 0; i < c.size(); ++i) target[i] = c[i] - shift[i];
        PointSet aset(m.rows(), gens);
        bool ok = psa_membership(aset, target, budget);
        if (!ok) return {false, {}};
        // recover a witness greedily along the decider's certificate by
        // re-walking: subtract generators while membership persists
        std::vector<Int> y(static_cast<std::size_t>(n), Int(1));
        PsaDecider dec(aset, budget);
        Point cur = target;
        while (!is_zero(cur)) {
            bool moved = false;
            for (std::size_t j = 0; j < static_cast<std::size_t>(n) && !moved; ++j) {
                Point col(m.rows());
                for (int i = 0; i < m.rows(); ++i)
                    col[static_cast<std::size_t>(i)] = m.entries[static_cast<std::size_t>(i)][j];
                if (is_zero(col)) continue;
                Point nxt = sub(cur, col);
                if (dec.cone().contains(nxt) && dec.contains(nxt)) {
                    cur = nxt;
                    y[j] += 1;
                    moved = true;
                }
            }
            if (!moved) throw std::logic_error("membership witness walk got stuck");
        }
        return {true, y};
    }

    // mixed case: solve for the hard coordinates with the pumpable ones
    // folded into a lattice; exact when one hard coordinate remains
    if (hard.size() == 1) {
        std::size_t jh = hard.front();
        linalg::IntMat gens;
        for (std::size_t j = 0; j < static_cast<std::size_t>(n); ++j) {
            if (j == jh) continue;
            std::vector<Int> col(static_cast<std::size_t>(m.rows()));
            for (int i = 0; i < m.rows(); ++i)
                col[static_cast<std::size_t>(i)] = m.entries[static_cast<std::size_t>(i)][j];
            gens.push_back(std::move(col));
        }
        std::vector<Int> colh(static_cast<std::size_t>(m.rows()));
        for (int i = 0; i < m.rows(); ++i)
            colh[static_cast<std::size_t>(i)] = m.entries[static_cast<std::size_t>(i)][jh];
        // c - y_h col_h must lie in lattice(gens) with integer y_h >= 1;
        // solutions in y_h form an arithmetic progression
        auto lat = linalg::hermite_form(gens, m.rows());
        linalg::HnfResult latres{lat.basis, lat.pivots};
        // order of col_h in Z^m / lattice(gens): smallest p >= 1 with
        // p col_h in the lattice, if any (p <= index when finite)
        std::optional<Int> period;
        {
            linalg::IntMat ext = gens;
            ext.push_back(colh);
            auto with = linalg::hermite_form(ext, m.rows());
            if (with.basis == lat.basis) period = Int(1);
            else {
                for (Int p = 1; p <= 4096; ++p) {
                    std::vector<Int> target(colh.size());
                    for (std::size_t i = 0; i < colh.size(); ++i) target[i] = p * colh[i];
                    if (linalg::hnf_coordinates(latres, target)) { period = p; break; }
                }
            }
        }
        Int y_low = -1;
        for (Int yh = 1; yh <= (period ? *period : Int(4096)); ++yh) {
            std::vector<Int> target(colh.size());
            for (std::size_t i = 0; i < colh.size(); ++i) target[i] = c[i] - yh * colh[i];
            if (linalg::hnf_coordinates(latres, target)) { y_low = yh; break; }
        }
        if (y_low < 0 && period) return {false, {}};
        if (y_low < 0)
            throw BudgetError("positive_extension: mixed case exhausted its search range", 4096);
        // fix y_h = y_low, solve the rest recursively (all pumpable now)
        linalg::IntMat m_rest(static_cast<std::size_t>(m.rows()));
        for (int i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j < static_cast<std::size_t>(n); ++j)
                if (j != jh)
                    m_rest[static_cast<std::size_t>(i)].push_back(
                        m.entries[static_cast<std::size_t>(i)][j]);
        std::vector<Int> c_rest(c.size());
        for (std::size_t i = 0; i < c.size(); ++i) c_rest[i] = c[i] - y_low * colh[i];
        ExtensionResult sub = positive_extension(IntegerMatrix{m_rest}, c_rest, budget);
        if (!sub.feasible) return {false, {}};
        std::vector<Int> y;
        std::size_t t = 0;
        for (std::size_t j = 0; j < static_cast<std::size_t>(n); ++j)
            y.push_back(j == jh ? y_low : sub.witness[t++]);
        return {true, y};
    }
    throw BudgetError("positive_extension: unsupported mixed lineality case", hard.size());
}

MinimalSolutionFamily minimal_positive_solutions(const IntegerMatrix& m,
                                                 const std::vector<Int>& b, int n1,
                                                 const Int& box_cap,
                                                 const EnumerationBudget& budget) {
    int n = m.cols();
    if (n < 2 || n1 < 1 || n1 >= n)
        throw UsageError("minimal_positive_solutions: need n1 + n2 = n >= 2 with both parts nonempty");
    if (static_cast<int>(b.size()) != m.rows())
        throw UsageError("minimal_positive_solutions: bad rhs size");
    Int k1 = m.max_abs_entry();
    Int k2 = 1;
    for (const Int& v : b) k2 = std::max(k2, abs_int(v));

    MinimalSolutionFamily fam;
    fam.n1 = n1;
    fam.n2 = n - n1;
    fam.lemma_bound = minimal_solution_bound(m.rows(), n, k1, k2);
    fam.box_used = std::min(fam.lemma_bound, box_cap);
    fam.certified = fam.box_used == fam.lemma_bound;

    linalg::IntMat m2(static_cast<std::size_t>(m.rows()));
    for (int i = 0; i < m.rows(); ++i)
        for (int j = n1; j < n; ++j)
            m2[static_cast<std::size_t>(i)].push_back(
                m.entries[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
    IntegerMatrix mat2{m2};

    // graded scan of the x-box; members found earlier dominate away the rest
    std::vector<std::vector<Int>> stack;
    Int cells = 1;
    for (int j = 0; j < n1; ++j) {
        cells *= fam.box_used;
        if (cells > Int(budget.max_points))
            throw BudgetError("minimal_positive_solutions: x-box exceeds point budget",
                              budget.max_points);
    }
    std::vector<std::vector<Int>> box;
    {
        std::vector<Int> x(static_cast<std::size_t>(n1), Int(1));
        std::function<void(int)> rec = [&](int pos) {
            if (pos == n1) {
                box.push_back(x);
                return;
            }
            for (Int v = 1; v <= fam.box_used; ++v) {
                x[static_cast<std::size_t>(pos)] = v;
                rec(pos + 1);
            }
        };
        rec(0);
    }
    std::sort(box.begin(), box.end(), [](const auto& p, const auto& q) {
        Int sp = 0, sq = 0;
        for (const Int& v : p) sp += v;
        for (const Int& v : q) sq += v;
        if (sp != sq) return sp < sq;
        return p < q;
    });
    auto dominated = [&](const std::vector<Int>& x) {
        for (const auto& s : fam.solutions) {
            bool ge = true, strict = false;
            for (int j = 0; j < n1; ++j) {
                if (x[static_cast<std::size_t>(j)] < s[static_cast<std::size_t>(j)]) { ge = false; break; }
                if (x[static_cast<std::size_t>(j)] > s[static_cast<std::size_t>(j)]) strict = true;
            }
            if (ge && strict) return true;
        }
        return false;
    };
    for (const auto& x : box) {
        if (dominated(x)) continue;
        std::vector<Int> c(b.size());
        for (std::size_t i = 0; i < b.size(); ++i) {
            c[i] = b[i];
            for (int j = 0; j < n1; ++j)
                c[i] -= m.entries[i][static_cast<std::size_t>(j)] * x[static_cast<std::size_t>(j)];
        }
        if (positive_extension(mat2, c, budget).feasible) fam.solutions.push_back(x);
    }
    std::sort(fam.solutions.begin(), fam.solutions.end());
    return fam;
}

}  // namespace sumsetlab
