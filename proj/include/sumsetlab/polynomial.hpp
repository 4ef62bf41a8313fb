#pragma once

#include <string>
#include <vector>

#include "sumsetlab/numbers.hpp"

namespace sumsetlab {

// Dense univariate polynomial with exact rational coefficients.
class RationalPolynomial {
public:
    RationalPolynomial() = default;
    explicit RationalPolynomial(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }
    static RationalPolynomial constant(const Rat& v) { return RationalPolynomial({v}); }
    static RationalPolynomial x();

    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    const std::vector<Rat>& coefficients() const { return c_; }
    Rat coefficient(int k) const;
    bool is_zero() const { return c_.empty(); }

    Rat operator()(const Rat& x) const;
    Rat operator()(const Int& x) const { return (*this)(Rat(x)); }

    RationalPolynomial& operator+=(const RationalPolynomial& o);
    RationalPolynomial& operator-=(const RationalPolynomial& o);
    RationalPolynomial& operator*=(const RationalPolynomial& o);
    RationalPolynomial& operator*=(const Rat& s);

    friend RationalPolynomial operator+(RationalPolynomial a, const RationalPolynomial& b) { return a += b; }
    friend RationalPolynomial operator-(RationalPolynomial a, const RationalPolynomial& b) { return a -= b; }
    friend RationalPolynomial operator*(RationalPolynomial a, const RationalPolynomial& b) { return a *= b; }
    friend RationalPolynomial operator*(const Rat& s, RationalPolynomial a) { return a *= s; }
    friend bool operator==(const RationalPolynomial& a, const RationalPolynomial& b) {
        return a.c_ == b.c_;
    }

    std::string to_string(const std::string& var = "N") const;

private:
    void trim();
    std::vector<Rat> c_;  // c_[k] is the coefficient of x^k
};

// (x - shift + k)(x - shift + k - 1)...(x - shift + 1) / k!, i.e. the
// polynomial form of binomial(x - shift + k, k).
RationalPolynomial binomial_polynomial(const Int& shift, unsigned k);

// Unique polynomial of degree < points.size() through (xs[i], ys[i]),
// by Newton divided differences over the rationals.
RationalPolynomial interpolate(const std::vector<Int>& xs, const std::vector<Int>& ys);

}  // namespace sumsetlab
