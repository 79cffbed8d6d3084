#include "rswt/genfunc.hpp"

#include <algorithm>

namespace rswt {

RationalGF generating_function(const FunctionAnalysis& a) {
    const int d = a.recurrence.order;

    // Q(x) = 1 - c_1 x - ... - c_d x^d = x^d * min(1/x).
    std::vector<mpz_class> qc(static_cast<size_t>(d) + 1);
    qc[0] = 1;
    for (int i = 1; i <= d; ++i) qc[static_cast<size_t>(i)] = -a.recurrence.coeffs[static_cast<size_t>(i - 1)];
    IntPoly Q(std::move(qc));

    const std::vector<mpz_class> w = weights_prefix(a, d);
    std::vector<mpz_class> pc(static_cast<size_t>(d), 0);
    for (int k = 0; k < d; ++k)
        for (int i = 0; i <= k; ++i) pc[static_cast<size_t>(k)] += Q.coeff(i) * w[static_cast<size_t>(k - i)];
    IntPoly P(std::move(pc));

    const IntPoly g = poly_gcd(P, Q);
    RationalGF gf;
    if (g.degree() > 0 || g.leading() != 1) {
        gf.num = div_exact(P, g);
        gf.den = div_exact(Q, g);
    } else {
        gf.num = P;
        gf.den = Q;
    }
    if (gf.den.coeff(0) == -1) {
        gf.num = -gf.num;
        gf.den = -gf.den;
    }
    if (gf.den.coeff(0) != 1)
        throw VerificationError("generating-function denominator lost its Q(0) = 1 form");
    return gf;
}

RationalGF generating_function(const QuadraticRS& q, const Limits& limits) {
    return generating_function(analyze(q, limits));
}

std::vector<mpz_class> expand_series(const RationalGF& gf, int N) {
    if (gf.den.coeff(0) != 1) throw VerificationError("series expansion needs Q(0) = 1");
    std::vector<mpz_class> u(static_cast<size_t>(std::max(N, 0)));
    for (int j = 0; j < N; ++j) {
        mpz_class acc = gf.num.coeff(j);
        const int top = std::min(j, gf.den.degree());
        for (int i = 1; i <= top; ++i) acc -= gf.den.coeff(i) * u[static_cast<size_t>(j - i)];
        u[static_cast<size_t>(j)] = std::move(acc);
    }
    return u;
}

} // namespace rswt
