#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace sumsetlab {

// All arithmetic in the library is exact. Widths in the paper's bounds
// (e.g. (2*l*w)^((d+4)*l)) overflow any fixed-size integer, so everything
// is arbitrary precision.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int abs_int(const Int& a) { return a < 0 ? Int(-a) : a; }

inline Int gcd_int(Int a, Int b) {
    a = abs_int(a);
    b = abs_int(b);
    while (b != 0) {
        Int t = a % b;
        a = b;
        b = t;
    }
    return a;
}

inline Int pow_int(const Int& base, unsigned long exp) {
    Int r = 1;
    Int b = base;
    unsigned long e = exp;
    while (e > 0) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

inline Int factorial(unsigned n) {
    Int r = 1;
    for (unsigned i = 2; i <= n; ++i) r *= i;
    return r;
}

// binomial(t, k) for integer t (possibly negative) and k >= 0, as the
// polynomial value t(t-1)...(t-k+1)/k!.
inline Int binomial(const Int& t, unsigned k) {
    Int num = 1;
    for (unsigned i = 0; i < k; ++i) num *= (t - Int(i));
    return num / factorial(k);
}

// Counting binomial: number of k-multisets, zero whenever t < k.
inline Int binomial_count(const Int& t, unsigned k) {
    if (t < Int(k)) return 0;
    return binomial(t, k);
}

inline Int floor_div(const Int& a, const Int& b) {
    Int q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

inline Int mod_floor(const Int& a, const Int& b) { return a - floor_div(a, b) * b; }

inline Rat frac_part(const Rat& r) {
    Int fl = floor_div(boost::multiprecision::numerator(r),
                       boost::multiprecision::denominator(r));
    return r - Rat(fl);
}

inline Int floor_rat(const Rat& r) {
    return floor_div(boost::multiprecision::numerator(r),
                     boost::multiprecision::denominator(r));
}

}  // namespace sumsetlab
