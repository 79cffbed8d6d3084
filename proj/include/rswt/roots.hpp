#pragma once

#include <gmpxx.h>

#include <vector>

#include "rswt/int_poly.hpp"

namespace rswt {

// Complex number over GMP floats.  Precision travels with the operands;
// binary operations inherit the precision of the left-hand side.
struct BigComplex {
    mpf_class re, im;

    BigComplex() = default;
    BigComplex(mpf_class r, mpf_class i) : re(std::move(r)), im(std::move(i)) {}

    BigComplex operator+(const BigComplex& o) const { return {re + o.re, im + o.im}; }
    BigComplex operator-(const BigComplex& o) const { return {re - o.re, im - o.im}; }
    BigComplex operator*(const BigComplex& o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    BigComplex operator/(const BigComplex& o) const;

    mpf_class norm2() const { return re * re + im * im; }
    mpf_class abs() const { return sqrt(norm2()); }
};

BigComplex pow_n(const BigComplex& base, long n);

struct ComplexRoot {
    BigComplex value;
    mpf_class error_bound; // certified bound d*|p(z)/p'(z)| on the distance to a true root
    int multiplicity = 1;
};

struct ComplexRootSet {
    int precision_digits = 0;
    std::vector<ComplexRoot> roots;
};

// All roots of a squarefree integer polynomial by simultaneous Durand-Kerner
// iteration.  Deterministic for a given (polynomial, precision).  Each root
// is certified to lie within 10^-precision_digits of a true root; throws
// NoConvergence if that cannot be reached.
ComplexRootSet complex_roots(const IntPoly& p, int precision_digits);

} // namespace rswt
