#include "rswt/roots.hpp"

#include <algorithm>
#include <cmath>

namespace rswt {

BigComplex BigComplex::operator/(const BigComplex& o) const {
    mpf_class d = o.norm2();
    return {(re * o.re + im * o.im) / d, (im * o.re - re * o.im) / d};
}

BigComplex pow_n(const BigComplex& base, long n) {
    const mp_bitcnt_t prec = base.re.get_prec();
    BigComplex acc(mpf_class(1, prec), mpf_class(0, prec));
    BigComplex b = base;
    long e = n;
    while (e) {
        if (e & 1) acc = acc * b;
        b = b * b;
        e >>= 1;
    }
    return acc;
}

namespace {

BigComplex eval_horner(const std::vector<BigComplex>& coeffs, const BigComplex& z) {
    BigComplex acc = coeffs.back();
    for (size_t i = coeffs.size() - 1; i-- > 0;) acc = acc * z + coeffs[i];
    return acc;
}

} // namespace

ComplexRootSet complex_roots(const IntPoly& p, int precision_digits) {
    if (p.degree() < 1) throw NoConvergence("root finding needs degree >= 1");
    const int d = p.degree();
    const mp_bitcnt_t prec =
        static_cast<mp_bitcnt_t>(std::ceil(precision_digits * 3.3219280948873626)) + 96;

    std::vector<BigComplex> c(static_cast<size_t>(d) + 1);
    for (int i = 0; i <= d; ++i) {
        c[static_cast<size_t>(i)] =
            BigComplex(mpf_class(p.coeff(i), prec), mpf_class(0, prec));
    }
    // Derivative coefficients for the certificate.
    std::vector<BigComplex> dc(static_cast<size_t>(d));
    for (int i = 1; i <= d; ++i)
        dc[static_cast<size_t>(i - 1)] =
            BigComplex(mpf_class(p.coeff(i) * i, prec), mpf_class(0, prec));

    // Cauchy bound on root moduli.
    mpf_class radius(1, prec);
    for (int i = 0; i < d; ++i) {
        mpf_class q(0, prec);
        q = abs(mpf_class(p.coeff(i), prec) / mpf_class(p.leading(), prec));
        if (q > radius) radius = q;
    }
    radius += 1;

    // Initial guesses: points on a circle, rotated off the real axis so
    // conjugate-symmetric root sets do not stall the iteration.
    std::vector<BigComplex> z(static_cast<size_t>(d));
    for (int k = 0; k < d; ++k) {
        const double angle = 2.0 * M_PI * k / d + 0.7390851332151607;
        mpf_class zr(std::cos(angle), prec), zi(std::sin(angle), prec);
        z[static_cast<size_t>(k)] = BigComplex(mpf_class(radius * zr, prec),
                                               mpf_class(radius * zi, prec));
    }

    mpf_class target(1, prec);
    mpf_div_2exp(target.get_mpf_t(), target.get_mpf_t(), prec - 48);

    const int max_iters = 2000;
    bool converged = false;
    for (int iter = 0; iter < max_iters && !converged; ++iter) {
        mpf_class worst(0, prec);
        for (int k = 0; k < d; ++k) {
            BigComplex denom(mpf_class(p.leading(), prec), mpf_class(0, prec));
            for (int j = 0; j < d; ++j) {
                if (j == k) continue;
                denom = denom * (z[static_cast<size_t>(k)] - z[static_cast<size_t>(j)]);
            }
            const BigComplex val = eval_horner(c, z[static_cast<size_t>(k)]);
            const BigComplex delta = val / denom;
            z[static_cast<size_t>(k)] = z[static_cast<size_t>(k)] - delta;
            mpf_class step = delta.norm2();
            if (step > worst) worst = step;
        }
        converged = worst < target * target;
    }
    if (!converged)
        throw NoConvergence("Durand-Kerner did not settle at " +
                            std::to_string(precision_digits) + " digits");

    // Certificate: for squarefree p the disc |z - root| <= d*|p(z)/p'(z)|
    // contains a true root.
    mpf_class tol(1, prec);
    {
        mpf_class ten(10, prec);
        mpf_pow_ui(tol.get_mpf_t(), ten.get_mpf_t(), static_cast<unsigned long>(precision_digits));
        tol = 1 / tol;
    }

    ComplexRootSet out;
    out.precision_digits = precision_digits;
    out.roots.reserve(static_cast<size_t>(d));
    for (int k = 0; k < d; ++k) {
        const BigComplex val = eval_horner(c, z[static_cast<size_t>(k)]);
        const BigComplex der = eval_horner(dc, z[static_cast<size_t>(k)]);
        const mpf_class dn = der.norm2();
        if (dn == 0) throw NoConvergence("derivative vanished at an approximate root");
        mpf_class bound = d * sqrt(val.norm2() / dn);
        if (bound > tol)
            throw NoConvergence("residual certificate failed at " +
                                std::to_string(precision_digits) + " digits");
        // Copy-construct so the full working precision travels with the root
        // (assignment into a default mpf_class would round to 64 bits).
        out.roots.push_back(ComplexRoot{z[static_cast<size_t>(k)], std::move(bound), 1});
    }

    // Canonical order: by real part, then imaginary part.
    std::sort(out.roots.begin(), out.roots.end(), [](const ComplexRoot& a, const ComplexRoot& b) {
        if (a.value.re != b.value.re) return a.value.re < b.value.re;
        return a.value.im < b.value.im;
    });
    return out;
}

} // namespace rswt
