#pragma once

#include <gmpxx.h>

#include <initializer_list>
#include <string>
#include <vector>

#include "rswt/errors.hpp"

namespace rswt {

// Dense univariate polynomial over Z with arbitrary-precision coefficients.
// Stored ascending by degree with no trailing zeros; the zero polynomial is
// the empty list.
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<mpz_class> ascending);
    IntPoly(std::initializer_list<long> ascending);

    static IntPoly zero() { return IntPoly{}; }
    static IntPoly constant(mpz_class c);
    static IntPoly monomial(int deg, mpz_class coeff = 1);

    // -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }

    // Coefficient of x^i; zero outside the stored range.
    const mpz_class& coeff(int i) const;
    const std::vector<mpz_class>& coeffs() const { return c_; }
    const mpz_class& leading() const;

    bool operator==(const IntPoly&) const = default;

    IntPoly operator-() const;
    IntPoly operator+(const IntPoly& o) const;
    IntPoly operator-(const IntPoly& o) const;
    IntPoly operator*(const IntPoly& o) const;
    IntPoly operator*(const mpz_class& k) const;

    IntPoly derivative() const;
    mpz_class eval(const mpz_class& x) const;

    // x^k * p.
    IntPoly shifted(int k) const;
    // x^deg(p) * p(1/x): the coefficient list reversed.
    IntPoly reciprocal() const;

    // Descending-degree display, e.g. "x^3-2x^2-2x+4".
    std::string to_string(const std::string& var = "x") const;

private:
    void trim();
    std::vector<mpz_class> c_;
};

// Exact quotient a / b; throws VerificationError if the division leaves a
// remainder or a non-integer quotient step.
IntPoly div_exact(const IntPoly& a, const IntPoly& b);

// True division test: q such that a = q*b exists over Z.
bool divides(const IntPoly& b, const IntPoly& a);

// Pseudo-remainder of a by b: lc(b)^(deg a - deg b + 1) * a = q*b + r.
IntPoly pseudo_rem(const IntPoly& a, const IntPoly& b);

// gcd of all coefficients; 0 for the zero polynomial.
mpz_class content(const IntPoly& p);

// p / content(p), sign-normalized to a positive leading coefficient.
IntPoly primitive_part(const IntPoly& p);

// Full integer gcd (content gcd times primitive gcd), positive leading
// coefficient.  gcd(0, p) = |p| normalized.
IntPoly poly_gcd(const IntPoly& a, const IntPoly& b);

// p / gcd(p, p'), primitive with positive leading coefficient.  Monic
// whenever p is monic.  Throws on the zero polynomial.
IntPoly squarefree_part(const IntPoly& p);

// Multiplicity of `root` as a root of p (repeated synthetic division).
int root_multiplicity(const IntPoly& p, const mpz_class& root);

} // namespace rswt
