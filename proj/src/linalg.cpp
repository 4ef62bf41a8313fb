#include "sumsetlab/linalg.hpp"

#include <algorithm>

#include "sumsetlab/errors.hpp"

namespace sumsetlab::linalg {

namespace {

std::size_t rows_of(const IntMat& m) { return m.size(); }
std::size_t cols_of(const IntMat& m) { return m.empty() ? 0 : m.front().size(); }

}  // namespace

int rank(const IntMat& m) {
    RatMat a(m.size());
    for (std::size_t i = 0; i < m.size(); ++i)
        a[i].assign(m[i].begin(), m[i].end());
    std::size_t nr = a.size(), nc = a.empty() ? 0 : a.front().size();
    int r = 0;
    for (std::size_t c = 0; c < nc && static_cast<std::size_t>(r) < nr; ++c) {
        std::size_t piv = nr;
        for (std::size_t i = r; i < nr; ++i)
            if (a[i][c] != 0) { piv = i; break; }
        if (piv == nr) continue;
        std::swap(a[r], a[piv]);
        for (std::size_t i = 0; i < nr; ++i) {
            if (i == static_cast<std::size_t>(r) || a[i][c] == 0) continue;
            Rat f = a[i][c] / a[r][c];
            for (std::size_t j = c; j < nc; ++j) a[i][j] -= f * a[r][j];
        }
        ++r;
    }
    return r;
}

Int determinant(IntMat m) {
    std::size_t n = m.size();
    if (n == 0) return 1;
    if (cols_of(m) != n) throw UsageError("determinant of non-square matrix");
    // Bareiss elimination keeps every intermediate entry an exact integer.
    Int prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t piv = n;
            for (std::size_t i = k + 1; i < n; ++i)
                if (m[i][k] != 0) { piv = i; break; }
            if (piv == n) return 0;
            std::swap(m[k], m[piv]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    return sign > 0 ? m[n - 1][n - 1] : Int(-m[n - 1][n - 1]);
}

IntMat kernel_basis(const IntMat& m) {
    std::size_t nr = rows_of(m), nc = cols_of(m);
    if (nc == 0) return {};
    // Column-reduce [M; I]; columns whose M-part vanishes carry kernel
    // vectors in the identity part.
    IntMat g(nr + nc, std::vector<Int>(nc, 0));
    for (std::size_t i = 0; i < nr; ++i)
        for (std::size_t j = 0; j < nc; ++j) g[i][j] = m[i][j];
    for (std::size_t j = 0; j < nc; ++j) g[nr + j][j] = 1;

    std::size_t lead = 0;
    for (std::size_t r = 0; r < nr && lead < nc; ++r) {
        // gcd-eliminate row r across columns lead..nc-1
        while (true) {
            std::size_t nz = nc;
            for (std::size_t j = lead; j < nc; ++j)
                if (g[r][j] != 0) { nz = j; break; }
            if (nz == nc) break;  // row r already zero on the active columns
            if (nz != lead) {
                for (std::size_t i = 0; i < g.size(); ++i) std::swap(g[i][lead], g[i][nz]);
            }
            bool others = false;
            for (std::size_t j = lead + 1; j < nc; ++j) {
                if (g[r][j] == 0) continue;
                others = true;
                // 2-column unimodular gcd step
                Int a = g[r][lead], b = g[r][j];
                Int old_a = a, old_b = b;
                Int x0 = 1, y0 = 0, x1 = 0, y1 = 1;
                while (b != 0) {
                    Int q = a / b;
                    Int t = a - q * b; a = b; b = t;
                    Int tx = x0 - q * x1; x0 = x1; x1 = tx;
                    Int ty = y0 - q * y1; y0 = y1; y1 = ty;
                }
                // a = gcd = x0*old_a + y0*old_b; (old_a/a, old_b/a) completes unimodularly
                Int ca = old_a / a, cb = old_b / a;
                for (std::size_t i = 0; i < g.size(); ++i) {
                    Int u = g[i][lead], v = g[i][j];
                    g[i][lead] = x0 * u + y0 * v;
                    g[i][j] = -cb * u + ca * v;
                }
            }
            if (!others) break;
        }
        if (g[r][lead] != 0) ++lead;
    }
    IntMat kernel;
    for (std::size_t j = 0; j < nc; ++j) {
        bool zero_top = true;
        for (std::size_t i = 0; i < nr; ++i)
            if (g[i][j] != 0) { zero_top = false; break; }
        if (!zero_top) continue;
        std::vector<Int> v(nc);
        bool nonzero = false;
        for (std::size_t i = 0; i < nc; ++i) {
            v[i] = g[nr + i][j];
            if (v[i] != 0) nonzero = true;
        }
        if (nonzero) kernel.push_back(std::move(v));
    }
    return size_reduce(std::move(kernel));
}

namespace {

// best integer q minimizing ||v - q*w||_inf, scanning candidate ratios
Int best_multiplier(const std::vector<Int>& v, const std::vector<Int>& w) {
    std::vector<Int> candidates{0};
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (w[i] == 0) continue;
        Int q = floor_div(v[i], w[i]);
        candidates.push_back(q);
        candidates.push_back(q + 1);
    }
    Int best_q = 0;
    Int best_norm = -1;
    for (const Int& q : candidates) {
        Int norm = 0;
        for (std::size_t i = 0; i < v.size(); ++i) norm = std::max(norm, abs_int(v[i] - q * w[i]));
        if (best_norm < 0 || norm < best_norm || (norm == best_norm && q < best_q)) {
            best_norm = norm;
            best_q = q;
        }
    }
    return best_q;
}

void canonical_sign(std::vector<Int>& v) {
    for (const Int& c : v) {
        if (c > 0) return;
        if (c < 0) {
            for (Int& x : v) x = -x;
            return;
        }
    }
}

Int vec_sup(const std::vector<Int>& v) {
    Int m = 0;
    for (const Int& c : v) m = std::max(m, abs_int(c));
    return m;
}

}  // namespace

IntMat size_reduce(IntMat basis) {
    if (basis.empty()) return basis;
    bool improved = true;
    int rounds = 0;
    while (improved && rounds < 64) {
        improved = false;
        ++rounds;
        for (std::size_t i = 0; i < basis.size(); ++i) {
            for (std::size_t j = 0; j < basis.size(); ++j) {
                if (i == j) continue;
                Int q = best_multiplier(basis[i], basis[j]);
                if (q == 0) continue;
                Int before = vec_sup(basis[i]);
                std::vector<Int> cand(basis[i].size());
                for (std::size_t k = 0; k < cand.size(); ++k)
                    cand[k] = basis[i][k] - q * basis[j][k];
                if (vec_sup(cand) < before) {
                    basis[i] = std::move(cand);
                    improved = true;
                }
            }
        }
    }
    // polish: for small ranks, try small integer recombinations
    if (basis.size() >= 2 && basis.size() <= 4) {
        const int box = 3;
        std::size_t k = basis.size();
        for (std::size_t i = 0; i < k; ++i) {
            std::vector<Int> best = basis[i];
            std::vector<int> coef(k, -box);
            while (true) {
                std::vector<Int> cand = basis[i];
                for (std::size_t j = 0; j < k; ++j) {
                    if (j == i || coef[j] == 0) continue;
                    for (std::size_t t = 0; t < cand.size(); ++t)
                        cand[t] += Int(coef[j]) * basis[j][t];
                }
                if (vec_sup(cand) < vec_sup(best)) best = cand;
                std::size_t pos = 0;
                while (pos < k && (pos == i || coef[pos] == box)) {
                    if (pos != i) coef[pos] = -box;
                    ++pos;
                }
                if (pos == k) break;
                ++coef[pos];
            }
            basis[i] = best;
        }
    }
    for (auto& v : basis) canonical_sign(v);
    std::sort(basis.begin(), basis.end());
    return basis;
}

std::optional<RatVec> solve_rational(const IntMat& m, const std::vector<Int>& rhs) {
    RatMat a(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) a[i].assign(m[i].begin(), m[i].end());
    RatVec b(rhs.begin(), rhs.end());
    return solve_rational_rat(a, b);
}

std::optional<RatVec> solve_rational_rat(const RatMat& m, const RatVec& rhs) {
    std::size_t nr = m.size(), nc = m.empty() ? 0 : m.front().size();
    RatMat a = m;
    RatVec b = rhs;
    std::vector<int> pivot_col;
    std::size_t r = 0;
    for (std::size_t c = 0; c < nc && r < nr; ++c) {
        std::size_t piv = nr;
        for (std::size_t i = r; i < nr; ++i)
            if (a[i][c] != 0) { piv = i; break; }
        if (piv == nr) continue;
        std::swap(a[r], a[piv]);
        std::swap(b[r], b[piv]);
        for (std::size_t i = 0; i < nr; ++i) {
            if (i == r || a[i][c] == 0) continue;
            Rat f = a[i][c] / a[r][c];
            for (std::size_t j = c; j < nc; ++j) a[i][j] -= f * a[r][j];
            b[i] -= f * b[r];
        }
        pivot_col.push_back(static_cast<int>(c));
        ++r;
    }
    for (std::size_t i = r; i < nr; ++i)
        if (b[i] != 0) return std::nullopt;
    RatVec x(nc, Rat(0));
    for (std::size_t i = 0; i < pivot_col.size(); ++i) {
        std::size_t c = static_cast<std::size_t>(pivot_col[i]);
        Rat v = b[i];
        for (std::size_t j = c + 1; j < nc; ++j)
            if (a[i][j] != 0) v -= a[i][j] * x[j];
        x[c] = v / a[i][c];
    }
    return x;
}

namespace {

HnfTransformResult hermite_impl(const IntMat& generators, int ambient_dim, bool want_transform) {
    std::size_t d = static_cast<std::size_t>(ambient_dim);
    for (const auto& g : generators)
        if (g.size() != d) throw UsageError("generator dimension mismatch");

    IntMat rows = generators;
    IntMat tr;
    if (want_transform) {
        tr.assign(rows.size(), std::vector<Int>(rows.size(), 0));
        for (std::size_t i = 0; i < rows.size(); ++i) tr[i][i] = 1;
    }
    auto row_combine = [&](std::size_t i1, std::size_t i2, const Int& x0, const Int& y0,
                           const Int& ca, const Int& cb) {
        // (row_i1, row_i2) <- (x0*row_i1 + y0*row_i2, -cb*row_i1 + ca*row_i2)
        for (std::size_t j = 0; j < d; ++j) {
            Int u = rows[i1][j], v = rows[i2][j];
            rows[i1][j] = x0 * u + y0 * v;
            rows[i2][j] = -cb * u + ca * v;
        }
        if (want_transform) {
            for (std::size_t j = 0; j < tr[i1].size(); ++j) {
                Int u = tr[i1][j], v = tr[i2][j];
                tr[i1][j] = x0 * u + y0 * v;
                tr[i2][j] = -cb * u + ca * v;
            }
        }
    };

    // Assign pivots right-to-left: the pivot of a row is its LAST nonzero,
    // giving the lower-triangular shape. `assigned[j]` is the row owning
    // pivot column j.
    std::vector<std::size_t> pivot_row(d, SIZE_MAX);
    std::vector<bool> active(rows.size(), true);
    for (int jj = static_cast<int>(d) - 1; jj >= 0; --jj) {
        std::size_t j = static_cast<std::size_t>(jj);
        // collect active rows with nonzero at column j
        std::size_t keep = SIZE_MAX;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (!active[i] || rows[i][j] == 0) continue;
            if (keep == SIZE_MAX) { keep = i; continue; }
            // gcd-combine rows keep, i to zero out rows[i][j]
            Int a = rows[keep][j], b = rows[i][j];
            Int old_a = a, old_b = b;
            Int x0 = 1, y0 = 0, x1 = 0, y1 = 1;
            while (b != 0) {
                Int q = a / b;
                Int t = a - q * b; a = b; b = t;
                Int tx = x0 - q * x1; x0 = x1; x1 = tx;
                Int ty = y0 - q * y1; y0 = y1; y1 = ty;
            }
            Int ca = old_a / a, cb = old_b / a;
            row_combine(keep, i, x0, y0, ca, cb);
        }
        if (keep == SIZE_MAX) continue;
        if (rows[keep][j] < 0) {
            for (std::size_t t = 0; t < d; ++t) rows[keep][t] = -rows[keep][t];
            if (want_transform)
                for (auto& x : tr[keep]) x = -x;
        }
        active[keep] = false;
        pivot_row[j] = keep;
    }
    // Reduce below-pivot entries: for pivot column j owned by row R, every
    // other pivot row with a larger pivot column gets its column-j entry
    // reduced into [0, pivot). Columns are processed from the right so that
    // a reduction never disturbs an already-reduced column.
    for (std::size_t j = d; j-- > 0;) {
        std::size_t rj = pivot_row[j];
        if (rj == SIZE_MAX) continue;
        const Int& piv = rows[rj][j];
        for (std::size_t j2 = j + 1; j2 < d; ++j2) {
            std::size_t r2 = pivot_row[j2];
            if (r2 == SIZE_MAX || rows[r2][j] == 0) continue;
            Int q = floor_div(rows[r2][j], piv);
            if (q == 0) continue;
            for (std::size_t t = 0; t < d; ++t) rows[r2][t] -= q * rows[rj][t];
            if (want_transform)
                for (std::size_t t = 0; t < tr[r2].size(); ++t) tr[r2][t] -= q * tr[rj][t];
        }
    }

    HnfTransformResult out;
    for (std::size_t j = 0; j < d; ++j) {
        if (pivot_row[j] == SIZE_MAX) continue;
        out.basis.push_back(rows[pivot_row[j]]);
        out.pivots.push_back(static_cast<int>(j));
        if (want_transform) out.transform.push_back(tr[pivot_row[j]]);
    }
    return out;
}

}  // namespace

HnfResult hermite_form(const IntMat& generators, int ambient_dim) {
    auto r = hermite_impl(generators, ambient_dim, false);
    return HnfResult{std::move(r.basis), std::move(r.pivots)};
}

HnfTransformResult hermite_form_with_transform(const IntMat& generators, int ambient_dim) {
    return hermite_impl(generators, ambient_dim, true);
}

std::optional<std::vector<Int>> hnf_coordinates(const HnfResult& h, const Point& x) {
    Point rem = x;
    std::size_t k = h.basis.size();
    std::vector<Int> t(k, 0);
    for (std::size_t ii = k; ii-- > 0;) {
        int p = h.pivots[ii];
        const Int& piv = h.basis[ii][static_cast<std::size_t>(p)];
        Int num = rem[static_cast<std::size_t>(p)];
        if (num % piv != 0) return std::nullopt;
        t[ii] = num / piv;
        if (t[ii] != 0)
            for (std::size_t j = 0; j < rem.size(); ++j) rem[j] -= t[ii] * h.basis[ii][j];
    }
    if (!is_zero(rem)) return std::nullopt;
    return t;
}

SnfResult smith_form(IntMat m) {
    std::size_t n = m.size();
    if (n == 0) return SnfResult{{}, {}};
    if (cols_of(m) != n) throw UsageError("smith_form expects a square matrix");
    IntMat v(n, std::vector<Int>(n, 0));
    for (std::size_t i = 0; i < n; ++i) v[i][i] = 1;

    auto col_op = [&](std::size_t c1, std::size_t c2, const Int& x0, const Int& y0,
                      const Int& ca, const Int& cb) {
        for (std::size_t i = 0; i < n; ++i) {
            Int a = m[i][c1], b = m[i][c2];
            m[i][c1] = x0 * a + y0 * b;
            m[i][c2] = -cb * a + ca * b;
        }
        for (std::size_t i = 0; i < n; ++i) {
            Int a = v[i][c1], b = v[i][c2];
            v[i][c1] = x0 * a + y0 * b;
            v[i][c2] = -cb * a + ca * b;
        }
    };
    auto gcd_pair = [](Int a, Int b, Int& x0, Int& y0, Int& ca, Int& cb) {
        Int old_a = a, old_b = b;
        x0 = 1; y0 = 0;
        Int x1 = 0, y1 = 1;
        while (b != 0) {
            Int q = a / b;
            Int t = a - q * b; a = b; b = t;
            Int tx = x0 - q * x1; x0 = x1; x1 = tx;
            Int ty = y0 - q * y1; y0 = y1; y1 = ty;
        }
        ca = old_a / a;
        cb = old_b / a;
    };

    for (std::size_t t = 0; t < n; ++t) {
        // find a nonzero pivot in the trailing submatrix
        std::size_t pi = n, pj = n;
        Int best = 0;
        for (std::size_t i = t; i < n; ++i)
            for (std::size_t j = t; j < n; ++j)
                if (m[i][j] != 0 && (best == 0 || abs_int(m[i][j]) < best)) {
                    best = abs_int(m[i][j]);
                    pi = i; pj = j;
                }
        if (pi == n) break;  // all zero from here on
        std::swap(m[t], m[pi]);
        if (pj != t)
            for (std::size_t i = 0; i < n; ++i) {
                std::swap(m[i][t], m[i][pj]);
                std::swap(v[i][t], v[i][pj]);
            }

        // Shrink the pivot by gcd combines until it divides its whole row
        // and column, then clear them by exact subtractions. Each combine
        // at least halves |pivot|, so this terminates.
        while (true) {
            bool shrunk = false;
            for (std::size_t j = t + 1; j < n; ++j) {
                if (m[t][j] % m[t][t] == 0) continue;
                Int x0, y0, ca, cb;
                gcd_pair(m[t][t], m[t][j], x0, y0, ca, cb);
                col_op(t, j, x0, y0, ca, cb);
                shrunk = true;
            }
            for (std::size_t i = t + 1; i < n; ++i) {
                if (m[i][t] % m[t][t] == 0) continue;
                Int x0, y0, ca, cb;
                gcd_pair(m[t][t], m[i][t], x0, y0, ca, cb);
                for (std::size_t j = 0; j < n; ++j) {
                    Int u = m[t][j], w = m[i][j];
                    m[t][j] = x0 * u + y0 * w;
                    m[i][j] = -cb * u + ca * w;
                }
                shrunk = true;
            }
            if (shrunk) continue;
            for (std::size_t j = t + 1; j < n; ++j) {
                if (m[t][j] == 0) continue;
                Int q = m[t][j] / m[t][t];
                for (std::size_t i = 0; i < n; ++i) {
                    m[i][j] -= q * m[i][t];
                    v[i][j] -= q * v[i][t];
                }
            }
            for (std::size_t i = t + 1; i < n; ++i) {
                if (m[i][t] == 0) continue;
                Int q = m[i][t] / m[t][t];
                for (std::size_t j = 0; j < n; ++j) m[i][j] -= q * m[t][j];
            }
            break;
        }
        // divisibility fix-up: fold any non-divisible entry into row t
        bool redo = false;
        for (std::size_t i = t + 1; i < n && !redo; ++i)
            for (std::size_t j = t + 1; j < n && !redo; ++j)
                if (m[i][j] % m[t][t] != 0) {
                    for (std::size_t c = 0; c < n; ++c) m[t][c] += m[i][c];
                    redo = true;
                }
        if (redo) { --t; continue; }
        if (m[t][t] < 0)
            for (std::size_t i = 0; i < n; ++i) { m[i][t] = -m[i][t]; v[i][t] = -v[i][t]; }
    }
    SnfResult out;
    out.diag.resize(n);
    for (std::size_t i = 0; i < n; ++i) out.diag[i] = m[i][i] < 0 ? Int(-m[i][i]) : m[i][i];
    out.v = std::move(v);
    return out;
}

}  // namespace sumsetlab::linalg
