#pragma once

#include "rswt/int_poly.hpp"
#include "rswt/weights.hpp"

namespace rswt {

// Rational generating function P(x)/Q(x) with Q(0) = 1 whose power-series
// coefficient of x^(i-1) is w_i.
struct RationalGF {
    IntPoly num;
    IntPoly den;
};

// Q = reciprocal of the recursion polynomial (1 - c_1 x - ... - c_d x^d),
// P = (Q * weight series) truncated below degree d, then reduced to lowest
// terms keeping Q(0) = 1.
RationalGF generating_function(const FunctionAnalysis& a);
RationalGF generating_function(const QuadraticRS& q, const Limits& limits = {});

// First N series coefficients of num/den by exact long division.
std::vector<mpz_class> expand_series(const RationalGF& gf, int N);

} // namespace rswt
