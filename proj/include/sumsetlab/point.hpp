#pragma once

#include <algorithm>
#include <vector>

#include "sumsetlab/errors.hpp"
#include "sumsetlab/numbers.hpp"

namespace sumsetlab {

// A lattice point is just its exact coordinate vector; comparisons are
// lexicographic, which fixes the canonical order used everywhere.
using Point = std::vector<Int>;

inline Point add(const Point& a, const Point& b) {
    if (a.size() != b.size()) throw UsageError("point dimension mismatch");
    Point r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline Point sub(const Point& a, const Point& b) {
    if (a.size() != b.size()) throw UsageError("point dimension mismatch");
    Point r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

inline Point neg(const Point& a) {
    Point r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
    return r;
}

inline Point scale(const Int& k, const Point& a) {
    Point r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = k * a[i];
    return r;
}

inline Int dot(const Point& a, const Point& b) {
    if (a.size() != b.size()) throw UsageError("point dimension mismatch");
    Int r = 0;
    for (std::size_t i = 0; i < a.size(); ++i) r += a[i] * b[i];
    return r;
}

inline bool is_zero(const Point& a) {
    return std::all_of(a.begin(), a.end(), [](const Int& c) { return c == 0; });
}

inline Point zero_point(int dim) { return Point(static_cast<std::size_t>(dim), Int(0)); }

inline Int sup_norm(const Point& a) {
    Int m = 0;
    for (const Int& c : a) m = std::max(m, abs_int(c));
    return m;
}

inline Int one_norm(const Point& a) {
    Int s = 0;
    for (const Int& c : a) s += abs_int(c);
    return s;
}

// gcd of the coordinates; 0 for the zero vector.
inline Int content(const Point& a) {
    Int g = 0;
    for (const Int& c : a) g = gcd_int(g, c);
    return g;
}

inline Point primitive(const Point& a) {
    Int g = content(a);
    if (g == 0 || g == 1) return a;
    Point r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] / g;
    return r;
}

// Canonically ordered, deduplicated finite subset of Z^d. Equality is
// representation equality.
class PointSet {
public:
    PointSet() : dim_(0) {}
    explicit PointSet(int dim) : dim_(dim) {
        if (dim < 0) throw UsageError("negative dimension");
    }
    PointSet(int dim, std::vector<Point> pts) : dim_(dim), pts_(std::move(pts)) {
        canonicalize();
    }
    explicit PointSet(std::vector<Point> pts) {
        if (pts.empty()) throw UsageError("cannot infer dimension of empty point set");
        dim_ = static_cast<int>(pts.front().size());
        pts_ = std::move(pts);
        canonicalize();
    }

    int dim() const { return dim_; }
    std::size_t size() const { return pts_.size(); }
    bool empty() const { return pts_.empty(); }
    const std::vector<Point>& points() const { return pts_; }
    const Point& operator[](std::size_t i) const { return pts_[i]; }

    bool contains(const Point& p) const {
        return std::binary_search(pts_.begin(), pts_.end(), p);
    }

    void insert(Point p) {
        if (static_cast<int>(p.size()) != dim_) throw UsageError("point dimension mismatch");
        auto it = std::lower_bound(pts_.begin(), pts_.end(), p);
        if (it == pts_.end() || *it != p) pts_.insert(it, std::move(p));
    }

    bool subset_of(const PointSet& other) const {
        for (const Point& p : pts_)
            if (!other.contains(p)) return false;
        return true;
    }

    friend bool operator==(const PointSet& a, const PointSet& b) {
        return a.dim_ == b.dim_ && a.pts_ == b.pts_;
    }
    friend bool operator!=(const PointSet& a, const PointSet& b) { return !(a == b); }

    auto begin() const { return pts_.begin(); }
    auto end() const { return pts_.end(); }

private:
    void canonicalize() {
        for (const Point& p : pts_)
            if (static_cast<int>(p.size()) != dim_)
                throw UsageError("point set has inconsistent dimensions");
        std::sort(pts_.begin(), pts_.end());
        pts_.erase(std::unique(pts_.begin(), pts_.end()), pts_.end());
    }

    int dim_;
    std::vector<Point> pts_;
};

inline PointSet translate(const PointSet& a, const Point& t) {
    std::vector<Point> pts;
    pts.reserve(a.size());
    for (const Point& p : a) pts.push_back(add(p, t));
    return PointSet(a.dim(), std::move(pts));
}

// b - A = { b - a : a in A }
inline PointSet reflect(const Point& b, const PointSet& a) {
    std::vector<Point> pts;
    pts.reserve(a.size());
    for (const Point& p : a) pts.push_back(sub(b, p));
    return PointSet(a.dim(), std::move(pts));
}

}  // namespace sumsetlab
