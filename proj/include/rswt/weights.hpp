#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include "rswt/charpoly.hpp"
#include "rswt/function.hpp"
#include "rswt/rules.hpp"
#include "rswt/truth_table.hpp"

namespace rswt {

// Linear recursion w_n = c_1 w_{n-1} + ... + c_d w_{n-d} read off the
// minimal polynomial of the rules matrix, plus a brute-forced initial
// window starting at n0 = 2*t_1 - 1 (the first index where the recursion
// provably tracks genuine weights).
struct WeightRecurrence {
    int order = 0;
    std::vector<mpz_class> coeffs;       // c_1..c_d; c_d != 0
    long n0 = 0;                         // first index of the trusted window
    std::vector<mpz_class> window;       // w_{n0} .. w_{n0 + d - 1}
    std::vector<std::string> warnings;   // e.g. validation points clamped by the cap
};

// One-time analysis bundle: rules matrices, polynomials, recursion and the
// weight sequence extended back to w_1.  Everything downstream reuses this.
struct FunctionAnalysis {
    QuadraticRS q;
    RulesArtifacts rules;
    IntPoly char_poly;
    IntPoly min_poly;
    WeightRecurrence recurrence;
    std::vector<mpz_class> head; // w_1 .. w_{n0 - 1}, backward extension

    bool min_equals_char() const { return min_poly == char_poly; }
};

FunctionAnalysis analyze(const QuadraticRS& q, const Limits& limits = {});

WeightRecurrence recurrence_from_minpoly(const QuadraticRS& q, const Limits& limits = {});

// Solves the recursion backwards from the window down to w_1; every
// back-step must divide exactly by c_d or the window is wrong.
std::vector<mpz_class> extend_backwards(const WeightRecurrence& rec);

// w_1..w_n by forward iteration (head + window + recursion).
std::vector<mpz_class> weights_prefix(const FunctionAnalysis& a, long n);

mpz_class weight_by_recursion(const FunctionAnalysis& a, long n);
mpz_class weight_by_recursion(const QuadraticRS& q, long n, const Limits& limits = {});

// 2^n - p_n/2 with p_n the n-th power sum of the characteristic polynomial
// roots (equivalently trace of rules^n).  Equals the true weight exactly
// when the easy-coefficients identity holds; throws VerificationError if
// p_n is odd (that would itself be a counterexample).
mpz_class weight_by_trace(const FunctionAnalysis& a, long n);
mpz_class weight_by_trace(const QuadraticRS& q, long n);

// Evaluates the root-power sum numerically, with multiplicities recovered
// by exact repeated division of char by gcds with min, and rounds; escalates
// precision until the pre-rounding distance to the nearest integer is
// < 0.25.  Starts at `precision_digits`.
mpz_class weight_by_roots(const FunctionAnalysis& a, long n, int precision_digits = 40);

// Weight shape of a quadratic function: balanced, or 2^(n-1) + sign*2^((n+v)/2-1).
struct PlateauedForm {
    bool balanced = false;
    int sign = 0; // +1 or -1 when not balanced
    int v = 0;    // same parity as n, 0 <= v
};

PlateauedForm plateaued_decompose(long n, const mpz_class& w);
mpz_class plateaued_reconstruct(long n, const PlateauedForm& f);

// Maximum v over n = t_1 .. t_1 + window (recursion weights); empty when
// every weight in the window is balanced.
std::optional<int> max_v(const FunctionAnalysis& a, int window);
std::optional<int> max_v(const QuadraticRS& q, int window, const Limits& limits = {});

// Checks that the computed minimal polynomial of the single-generator rules
// matrix equals (x-2)(x^(2t-2) - 2^(t-1)) expanded.
bool mrs_closed_form_check(int t);

struct EccRow {
    long n = 0;
    mpz_class trace_weight;
    mpz_class recursion_weight;
    std::optional<mpz_class> brute_weight;
    bool agree = true;
};

struct ECCReport {
    QuadraticRS q;
    long n_max = 0;
    IntPoly min_poly;
    IntPoly char_poly;
    bool min_equals_char = false; // when true a disagreement is a software bug,
                                  // otherwise a conjecture counterexample
    bool holds = true;
    std::vector<EccRow> rows;
    std::vector<std::string> notes;
};

ECCReport verify_ecc(const QuadraticRS& q, long n_max, const Limits& limits = {});
ECCReport verify_ecc(const FunctionAnalysis& a, long n_max, const Limits& limits = {});

} // namespace rswt
