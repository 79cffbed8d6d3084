#include "rswt/weights.hpp"

#include <algorithm>

#include "rswt/roots.hpp"

namespace rswt {

namespace {

mpz_class pow2(long e) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), 2, static_cast<unsigned long>(e));
    return r;
}

// Next weight from the d values preceding it (most recent last).
mpz_class step_forward(const std::vector<mpz_class>& coeffs, const std::vector<mpz_class>& tail) {
    const size_t d = coeffs.size();
    mpz_class acc = 0;
    for (size_t i = 0; i < d; ++i) acc += coeffs[i] * tail[tail.size() - 1 - i];
    return acc;
}

} // namespace

WeightRecurrence recurrence_from_minpoly(const QuadraticRS& q, const Limits& limits) {
    return analyze(q, limits).recurrence;
}

std::vector<mpz_class> extend_backwards(const WeightRecurrence& rec) {
    const int d = rec.order;
    const mpz_class& cd = rec.coeffs.back();
    // seq holds w_k .. w_{k+d-1}; walk k down from n0 to 1.
    std::vector<mpz_class> seq = rec.window;
    std::vector<mpz_class> head(static_cast<size_t>(rec.n0 > 0 ? rec.n0 - 1 : 0));
    for (long k = rec.n0 - 1; k >= 1; --k) {
        // w_{k+d} = c_1 w_{k+d-1} + ... + c_d w_k  =>  solve for w_k.
        mpz_class rhs = seq[static_cast<size_t>(d - 1)];
        for (int i = 1; i < d; ++i) rhs -= rec.coeffs[static_cast<size_t>(i - 1)] *
                                           seq[static_cast<size_t>(d - 1 - i)];
        mpz_class w, r;
        mpz_tdiv_qr(w.get_mpz_t(), r.get_mpz_t(), rhs.get_mpz_t(), cd.get_mpz_t());
        if (r != 0)
            throw VerificationError("backward extension produced a non-integer at n = " +
                                    std::to_string(k));
        seq.pop_back();
        seq.insert(seq.begin(), w);
        head[static_cast<size_t>(k - 1)] = std::move(w);
    }
    return head;
}

FunctionAnalysis analyze(const QuadraticRS& q, const Limits& limits) {
    FunctionAnalysis a;
    a.q = q;
    a.rules = rules_matrix(q);
    a.char_poly = char_poly(a.rules.rules);
    a.min_poly = min_poly(a.rules.rules, a.char_poly);

    const int d = a.min_poly.degree();
    a.recurrence.order = d;
    a.recurrence.coeffs.resize(static_cast<size_t>(d));
    for (int i = 1; i <= d; ++i)
        a.recurrence.coeffs[static_cast<size_t>(i - 1)] = -a.min_poly.coeff(d - i);
    if (a.recurrence.coeffs.back() == 0)
        throw VerificationError("minimal polynomial is divisible by x");

    a.recurrence.n0 = 2L * q.t1() - 1;
    const long window_end = a.recurrence.n0 + d - 1;
    if (window_end > limits.brute_cap)
        throw CapExceeded("initial window needs brute force up to n = " +
                          std::to_string(window_end) + ", beyond cap " +
                          std::to_string(limits.brute_cap));
    for (long n = a.recurrence.n0; n <= window_end; ++n)
        a.recurrence.window.emplace_back(
            brute_force_weight(FunctionInstance(q, static_cast<int>(n)), limits.brute_cap));

    // Validate on d + validation_points additional brute-force points,
    // clamped by the cap.
    const long want = window_end + d + limits.validation_points;
    const long have = std::min<long>(want, limits.brute_cap);
    if (have < want)
        a.recurrence.warnings.push_back("validation clamped to n <= " + std::to_string(have) +
                                        " by the brute-force cap");
    std::vector<mpz_class> tail = a.recurrence.window;
    for (long n = window_end + 1; n <= have; ++n) {
        mpz_class predicted = step_forward(a.recurrence.coeffs, tail);
        const mpz_class actual =
            brute_force_weight(FunctionInstance(q, static_cast<int>(n)), limits.brute_cap);
        if (predicted != actual)
            throw VerificationError("recursion disagrees with brute force at n = " +
                                    std::to_string(n) + " for " + q.to_spec());
        tail.push_back(std::move(predicted));
    }

    a.head = extend_backwards(a.recurrence);
    return a;
}

std::vector<mpz_class> weights_prefix(const FunctionAnalysis& a, long n) {
    if (n < 1) return {};
    std::vector<mpz_class> w;
    w.reserve(static_cast<size_t>(n));
    for (const auto& v : a.head) {
        if (static_cast<long>(w.size()) >= n) break;
        w.push_back(v);
    }
    for (const auto& v : a.recurrence.window) {
        if (static_cast<long>(w.size()) >= n) break;
        w.push_back(v);
    }
    while (static_cast<long>(w.size()) < n) {
        mpz_class next = 0;
        const int d = a.recurrence.order;
        for (int i = 1; i <= d; ++i)
            next += a.recurrence.coeffs[static_cast<size_t>(i - 1)] * w[w.size() - i];
        w.push_back(std::move(next));
    }
    return w;
}

mpz_class weight_by_recursion(const FunctionAnalysis& a, long n) {
    if (n < 1) throw ParseError("weights are indexed from n = 1");
    return weights_prefix(a, n).back();
}

mpz_class weight_by_recursion(const QuadraticRS& q, long n, const Limits& limits) {
    return weight_by_recursion(analyze(q, limits), n);
}

mpz_class weight_by_trace(const FunctionAnalysis& a, long n) {
    if (n < 1) throw ParseError("weights are indexed from n = 1");
    const std::vector<mpz_class> p = power_sums(a.char_poly, static_cast<int>(n));
    const mpz_class& pn = p.back();
    if (mpz_odd_p(pn.get_mpz_t()))
        throw VerificationError("trace power sum p_" + std::to_string(n) +
                                " is odd for " + a.q.to_spec() +
                                "; the easy-coefficients weight is not an integer");
    return pow2(n) - pn / 2;
}

mpz_class weight_by_trace(const QuadraticRS& q, long n) {
    FunctionAnalysis a;
    a.q = q;
    a.rules = rules_matrix(q);
    a.char_poly = char_poly(a.rules.rules);
    return weight_by_trace(a, n);
}

mpz_class weight_by_roots(const FunctionAnalysis& a, long n, int precision_digits) {
    if (n < 1) throw ParseError("weights are indexed from n = 1");

    // Split char into factors G_1 | G_2-free chain: char = G_1 * G_2 * ...,
    // G_{j+1} | G_j | min; a root of min has multiplicity = number of G_j
    // containing it.  All exact.
    std::vector<IntPoly> parts;
    IntPoly rest = a.char_poly;
    while (rest.degree() > 0) {
        IntPoly g = poly_gcd(rest, a.min_poly);
        if (g.degree() < 1)
            throw VerificationError("characteristic polynomial has roots outside the minimal "
                                    "polynomial");
        rest = div_exact(rest, g);
        parts.push_back(std::move(g));
    }
    // Remove the single root 2 (it contributes the 2^(n-1) main term).
    int twos = 0;
    for (auto& g : parts) {
        if (g.eval(2) == 0) {
            g = div_exact(g, IntPoly{{-2, 1}});
            ++twos;
        }
    }
    if (twos != 1)
        throw VerificationError("expected the root 2 exactly once in the characteristic "
                                "polynomial, found it in " + std::to_string(twos) + " factors");

    const int ceiling = 2560;
    for (int digits = precision_digits; digits <= ceiling; digits *= 2) {
        const mp_bitcnt_t prec =
            static_cast<mp_bitcnt_t>(digits * 3.3219280948873626) + 96;
        mpf_class sum_re(0, prec), sum_im(0, prec);
        bool ok = true;
        try {
            for (const auto& g : parts) {
                if (g.degree() < 1) continue;
                const ComplexRootSet rs = complex_roots(g, digits);
                for (const auto& r : rs.roots) {
                    const BigComplex zn = pow_n(r.value, n);
                    sum_re += zn.re;
                    sum_im += zn.im;
                }
            }
        } catch (const NoConvergence&) {
            ok = false;
        }
        if (ok) {
            // w = 2^(n-1) - sum/2; sum must be (numerically) a real even integer.
            mpf_class w(0, prec);
            w = mpf_class(pow2(n - 1), prec) - sum_re / 2;
            mpf_class rounded(0, prec);
            mpf_floor(rounded.get_mpf_t(), mpf_class(w + 0.5).get_mpf_t());
            const mpf_class dist_re = abs(w - rounded);
            const mpf_class dist_im = abs(sum_im);
            if (dist_re < 0.25 && dist_im < 0.25) {
                mpz_class out;
                mpz_set_f(out.get_mpz_t(), rounded.get_mpf_t());
                return out;
            }
        }
    }
    throw NoConvergence("root-based weight did not stabilize below the precision ceiling");
}

PlateauedForm plateaued_decompose(long n, const mpz_class& w) {
    if (n < 1) throw ParseError("plateaued form needs n >= 1");
    if (w < 0 || w > pow2(n)) throw NotPlateaued("weight out of range [0, 2^n]");
    const mpz_class half = pow2(n - 1);
    PlateauedForm f;
    if (w == half) {
        f.balanced = true;
        return f;
    }
    mpz_class diff = w - half;
    f.sign = diff > 0 ? 1 : -1;
    mpz_class mag = diff > 0 ? diff : mpz_class(-diff);
    // mag must be a power of two, 2^((n+v)/2 - 1).
    if (mpz_popcount(mag.get_mpz_t()) != 1)
        throw NotPlateaued("offset from balance is not a power of two: " + mag.get_str());
    const long e = static_cast<long>(mpz_sizeinbase(mag.get_mpz_t(), 2)) - 1;
    const long v = 2 * (e + 1) - n;
    if (v < 0) throw NotPlateaued("offset exponent too small for a plateaued weight");
    f.v = static_cast<int>(v);
    return f;
}

mpz_class plateaued_reconstruct(long n, const PlateauedForm& f) {
    if (f.balanced) return pow2(n - 1);
    return pow2(n - 1) + mpz_class(f.sign) * pow2((n + f.v) / 2 - 1);
}

std::optional<int> max_v(const FunctionAnalysis& a, int window) {
    const long hi = a.q.t1() + window;
    const std::vector<mpz_class> w = weights_prefix(a, hi);
    std::optional<int> best;
    for (long n = a.q.t1(); n <= hi; ++n) {
        const PlateauedForm f = plateaued_decompose(n, w[static_cast<size_t>(n - 1)]);
        if (!f.balanced && (!best || f.v > *best)) best = f.v;
    }
    return best;
}

std::optional<int> max_v(const QuadraticRS& q, int window, const Limits& limits) {
    return max_v(analyze(q, limits), window);
}

bool mrs_closed_form_check(int t) {
    if (t < 2) throw ParseError("offset must be >= 2");
    const QuadraticRS q = QuadraticRS::from_offsets({t});
    const RulesArtifacts art = rules_matrix(q);
    const IntPoly mp = min_poly(art.rules);

    // (x - 2) * (x^(2t-2) - 2^(t-1))
    std::vector<mpz_class> lift(static_cast<size_t>(2 * t - 1), 0);
    lift[static_cast<size_t>(2 * t - 2)] = 1;
    lift[0] = -pow2(t - 1);
    const IntPoly expected = IntPoly{{-2, 1}} * IntPoly(std::move(lift));
    return mp == expected;
}

ECCReport verify_ecc(const FunctionAnalysis& a, long n_max, const Limits& limits) {
    ECCReport rep;
    rep.q = a.q;
    rep.n_max = n_max;
    rep.min_poly = a.min_poly;
    rep.char_poly = a.char_poly;
    rep.min_equals_char = a.min_equals_char();

    const std::vector<mpz_class> p = power_sums(a.char_poly, static_cast<int>(n_max));
    const std::vector<mpz_class> w = weights_prefix(a, n_max);

    for (long n = 1; n <= n_max; ++n) {
        EccRow row;
        row.n = n;
        row.recursion_weight = w[static_cast<size_t>(n - 1)];
        const mpz_class& pn = p[static_cast<size_t>(n - 1)];
        if (mpz_odd_p(pn.get_mpz_t())) {
            rep.notes.push_back("power sum p_" + std::to_string(n) +
                                " is odd; easy-coefficients weight is not an integer");
            row.agree = false;
            rep.holds = false;
            rep.rows.push_back(std::move(row));
            continue;
        }
        row.trace_weight = pow2(n) - pn / 2;
        if (n >= a.q.t1() && n <= limits.brute_cap)
            row.brute_weight = brute_force_weight(FunctionInstance(a.q, static_cast<int>(n)),
                                                  limits.brute_cap);
        row.agree = row.trace_weight == row.recursion_weight &&
                    (!row.brute_weight || *row.brute_weight == row.recursion_weight);
        if (!row.agree) rep.holds = false;
        rep.rows.push_back(std::move(row));
    }
    return rep;
}

ECCReport verify_ecc(const QuadraticRS& q, long n_max, const Limits& limits) {
    return verify_ecc(analyze(q, limits), n_max, limits);
}

} // namespace rswt
