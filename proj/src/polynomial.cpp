#include "sumsetlab/polynomial.hpp"

#include <sstream>

#include "sumsetlab/errors.hpp"

namespace sumsetlab {

RationalPolynomial RationalPolynomial::x() {
    return RationalPolynomial({Rat(0), Rat(1)});
}

Rat RationalPolynomial::coefficient(int k) const {
    if (k < 0 || k >= static_cast<int>(c_.size())) return Rat(0);
    return c_[static_cast<std::size_t>(k)];
}

Rat RationalPolynomial::operator()(const Rat& x) const {
    Rat v = 0;
    for (std::size_t i = c_.size(); i-- > 0;) v = v * x + c_[i];
    return v;
}

RationalPolynomial& RationalPolynomial::operator+=(const RationalPolynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rat(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

RationalPolynomial& RationalPolynomial::operator-=(const RationalPolynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rat(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

RationalPolynomial& RationalPolynomial::operator*=(const RationalPolynomial& o) {
    if (c_.empty() || o.c_.empty()) {
        c_.clear();
        return *this;
    }
    std::vector<Rat> r(c_.size() + o.c_.size() - 1, Rat(0));
    for (std::size_t i = 0; i < c_.size(); ++i)
        for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    c_ = std::move(r);
    trim();
    return *this;
}

RationalPolynomial& RationalPolynomial::operator*=(const Rat& s) {
    for (Rat& v : c_) v *= s;
    trim();
    return *this;
}

void RationalPolynomial::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

std::string RationalPolynomial::to_string(const std::string& var) const {
    if (c_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = c_.size(); i-- > 0;) {
        if (c_[i] == 0) continue;
        Rat v = c_[i];
        if (first) {
            if (v < 0) { out << "-"; v = -v; }
        } else {
            out << (v < 0 ? " - " : " + ");
            if (v < 0) v = -v;
        }
        first = false;
        bool unit = (v == 1) && i > 0;
        if (!unit) out << v;
        if (i > 0) {
            if (!unit) out << "*";
            out << var;
            if (i > 1) out << "^" << i;
        }
    }
    return out.str();
}

RationalPolynomial binomial_polynomial(const Int& shift, unsigned k) {
    RationalPolynomial p = RationalPolynomial::constant(Rat(1));
    for (unsigned i = 1; i <= k; ++i) {
        // factor (x - shift + i)
        p *= RationalPolynomial({Rat(Int(i) - shift), Rat(1)});
    }
    p *= Rat(Int(1), factorial(k));
    return p;
}

RationalPolynomial interpolate(const std::vector<Int>& xs, const std::vector<Int>& ys) {
    if (xs.size() != ys.size() || xs.empty())
        throw UsageError("interpolate: need matching, nonempty x/y lists");
    std::size_t n = xs.size();
    // Newton divided differences
    std::vector<Rat> coef(n);
    std::vector<Rat> col(ys.begin(), ys.end());
    coef[0] = col[0];
    for (std::size_t level = 1; level < n; ++level) {
        for (std::size_t i = 0; i + level < n; ++i) {
            Rat dx = Rat(xs[i + level] - xs[i]);
            if (dx == 0) throw UsageError("interpolate: repeated x value");
            col[i] = (col[i + 1] - col[i]) / dx;
        }
        col.pop_back();
        coef[level] = col[0];
    }
    RationalPolynomial p;
    RationalPolynomial basis = RationalPolynomial::constant(Rat(1));
    for (std::size_t k = 0; k < n; ++k) {
        p += coef[k] * basis;
        basis *= RationalPolynomial({Rat(-xs[k]), Rat(1)});
    }
    return p;
}

}  // namespace sumsetlab
