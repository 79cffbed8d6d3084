#include "rswt/charpoly.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>

namespace rswt {

namespace {

using u64 = uint64_t;
using u128 = unsigned __int128;

inline u64 mulmod(u64 a, u64 b, u64 p) { return static_cast<u64>(u128(a) * b % p); }

u64 powmod(u64 a, u64 e, u64 p) {
    u64 r = 1;
    while (e) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

bool is_prime_u64(u64 n) {
    if (n < 2) return false;
    for (u64 q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % q == 0) return n == q;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) d >>= 1, ++s;
    for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        u64 x = powmod(a % n, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

u64 modinv(u64 a, u64 p) { return powmod(a, p - 2, p); }

// char poly of an n x n matrix mod p (entries already reduced).  Reduces to
// upper Hessenberg form by similarity, then runs the leading-principal-minor
// recursion.  Returns n+1 coefficients, ascending.
std::vector<u64> charpoly_mod_p(std::vector<u64> h, int64_t n, u64 p) {
    auto at = [&](int64_t i, int64_t j) -> u64& { return h[static_cast<size_t>(i * n + j)]; };

    for (int64_t j = 0; j + 2 < n; ++j) {
        int64_t piv = -1;
        for (int64_t i = j + 1; i < n; ++i)
            if (at(i, j) != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        if (piv != j + 1) {
            for (int64_t k = 0; k < n; ++k) std::swap(at(piv, k), at(j + 1, k));
            for (int64_t k = 0; k < n; ++k) std::swap(at(k, piv), at(k, j + 1));
        }
        const u64 inv = modinv(at(j + 1, j), p);
        for (int64_t i = j + 2; i < n; ++i) {
            const u64 f = mulmod(at(i, j), inv, p);
            if (f == 0) continue;
            const u64 negf = p - f;
            // row_i -= f * row_{j+1}
            for (int64_t k = j; k < n; ++k) {
                at(i, k) = (at(i, k) + mulmod(negf, at(j + 1, k), p)) % p;
            }
            // col_{j+1} += f * col_i
            for (int64_t k = 0; k < n; ++k) {
                at(k, j + 1) = (at(k, j + 1) + mulmod(f, at(k, i), p)) % p;
            }
        }
    }

    // p_m = char poly of the leading m x m block.
    std::vector<std::vector<u64>> cp(static_cast<size_t>(n) + 1);
    cp[0] = {1};
    for (int64_t m = 1; m <= n; ++m) {
        const auto& prev = cp[static_cast<size_t>(m - 1)];
        std::vector<u64> cur(static_cast<size_t>(m) + 1, 0);
        const u64 diag = at(m - 1, m - 1);
        for (size_t i = 0; i < prev.size(); ++i) {
            cur[i + 1] = (cur[i + 1] + prev[i]) % p;
            if (diag) cur[i] = (cur[i] + mulmod(p - diag, prev[i], p)) % p;
        }
        u64 prod = 1;
        for (int64_t i = m - 1; i >= 1; --i) {
            prod = mulmod(prod, at(i, i - 1), p);
            if (prod == 0) break;
            const u64 f = mulmod(at(i - 1, m - 1), prod, p);
            if (f == 0) continue;
            const u64 negf = p - f;
            const auto& pi = cp[static_cast<size_t>(i - 1)];
            for (size_t k = 0; k < pi.size(); ++k) cur[k] = (cur[k] + mulmod(negf, pi[k], p)) % p;
        }
        cp[static_cast<size_t>(m)] = std::move(cur);
    }
    return cp[static_cast<size_t>(n)];
}

// Rigorous bit bound for the characteristic polynomial coefficients of a
// matrix with the given row 2-norms: the coefficient of x^(n-k) is a sum of
// C(n,k) principal k x k minors, each bounded by the product of the k
// largest row norms (Hadamard).
long coeff_bound_bits(const std::vector<double>& row_norms, int64_t n) {
    std::vector<double> log2n;
    log2n.reserve(row_norms.size());
    for (double r : row_norms)
        if (r > 0) log2n.push_back(std::log2(r));
    std::sort(log2n.begin(), log2n.end(), std::greater<double>());

    double best = 0;
    double prefix = 0;
    const double lg = std::lgamma(static_cast<double>(n) + 1);
    for (size_t k = 1; k <= log2n.size(); ++k) {
        prefix += log2n[k - 1];
        const double log2binom =
            (lg - std::lgamma(static_cast<double>(k) + 1) -
             std::lgamma(static_cast<double>(n - static_cast<int64_t>(k)) + 1)) /
            std::log(2.0);
        best = std::max(best, log2binom + prefix);
    }
    return static_cast<long>(best) + 64;
}

std::vector<u64> prime_list(long total_bits) {
    std::vector<u64> primes;
    long have = 0;
    u64 cand = (1ull << 62) - 1;
    while (have <= total_bits) {
        while (!is_prime_u64(cand)) --cand;
        primes.push_back(cand);
        have += 61;
        --cand;
    }
    return primes;
}

} // namespace

IntPoly char_poly_faddeev(const IntMatrix& a) {
    const int64_t n = a.size();
    std::vector<mpz_class> coeffs(static_cast<size_t>(n) + 1, 0);
    coeffs[static_cast<size_t>(n)] = 1;
    IntMatrix m = a;
    for (int64_t k = 1; k <= n; ++k) {
        mpz_class ck, rem;
        const mpz_class tr = m.trace();
        mpz_tdiv_qr(ck.get_mpz_t(), rem.get_mpz_t(), tr.get_mpz_t(), mpz_class(k).get_mpz_t());
        if (rem != 0) throw VerificationError("Faddeev-LeVerrier trace division not exact");
        coeffs[static_cast<size_t>(n - k)] = -ck;
        if (k < n) {
            for (int64_t i = 0; i < n; ++i) m.at(i, i) -= ck;
            m = a * m;
        }
    }
    return IntPoly(std::move(coeffs));
}

IntPoly char_poly_crt(const SparseIntMatrix& s) {
    const int64_t n = s.n;
    if (n == 0) return IntPoly{{1}};

    std::vector<double> norms(static_cast<size_t>(n), 0.0);
    for (int64_t i = 0; i < n; ++i) {
        double acc = 0;
        for (const auto& [j, v] : s.rows[static_cast<size_t>(i)])
            acc += static_cast<double>(v) * static_cast<double>(v);
        norms[static_cast<size_t>(i)] = std::sqrt(acc);
    }
    const long bits = coeff_bound_bits(norms, n);
    const std::vector<u64> primes = prime_list(bits);
    const int np = static_cast<int>(primes.size());

    std::vector<std::vector<u64>> residues(static_cast<size_t>(np));

#pragma omp parallel for schedule(dynamic)
    for (int pi = 0; pi < np; ++pi) {
        const u64 p = primes[static_cast<size_t>(pi)];
        std::vector<u64> dense(static_cast<size_t>(n) * n, 0);
        for (int64_t i = 0; i < n; ++i)
            for (const auto& [j, v] : s.rows[static_cast<size_t>(i)])
                dense[static_cast<size_t>(i * n + j)] = v >= 0 ? static_cast<u64>(v)
                                                               : p - static_cast<u64>(-v);
        residues[static_cast<size_t>(pi)] = charpoly_mod_p(std::move(dense), n, p);
    }

    // CRT with symmetric lift.
    mpz_class modulus = 1;
    for (u64 p : primes) modulus *= mpz_class(p);
    std::vector<mpz_class> basis(static_cast<size_t>(np));
    for (int pi = 0; pi < np; ++pi) {
        const mpz_class p(primes[static_cast<size_t>(pi)]);
        mpz_class rest = modulus / p;
        mpz_class inv;
        if (mpz_invert(inv.get_mpz_t(), rest.get_mpz_t(), p.get_mpz_t()) == 0)
            throw ConstructionError("CRT basis inversion failed");
        basis[static_cast<size_t>(pi)] = rest * inv;
    }
    const mpz_class half = modulus / 2;

    std::vector<mpz_class> coeffs(static_cast<size_t>(n) + 1);
    for (int64_t c = 0; c <= n; ++c) {
        mpz_class acc = 0;
        for (int pi = 0; pi < np; ++pi)
            acc += basis[static_cast<size_t>(pi)] *
                   mpz_class(residues[static_cast<size_t>(pi)][static_cast<size_t>(c)]);
        acc %= modulus;
        if (acc < 0) acc += modulus;
        if (acc > half) acc -= modulus;
        coeffs[static_cast<size_t>(c)] = acc;
    }
    return IntPoly(std::move(coeffs));
}

IntPoly char_poly(const IntMatrix& m) {
    if (m.size() <= 48) return char_poly_faddeev(m);
    return char_poly_crt(to_sparse(m));
}

IntPoly min_poly(const IntMatrix& m, const IntPoly& charpoly) {
    IntPoly sq = squarefree_part(charpoly);
    if (!sq.is_monic()) throw VerificationError("squarefree part of monic char poly not monic");
    if (!eval_poly_at(sq, m).is_zero())
        throw VerificationError("squarefree part does not annihilate the matrix; "
                                "matrix is not diagonalizable");
    return sq;
}

IntPoly min_poly(const IntMatrix& m) { return min_poly(m, char_poly(m)); }

std::vector<mpz_class> power_sums(const IntPoly& monic, int N) {
    if (!monic.is_monic()) throw VerificationError("power_sums needs a monic polynomial");
    const int d = monic.degree();
    // a_i = coefficient of x^(d-i), a_0 = 1.
    std::vector<mpz_class> p(static_cast<size_t>(std::max(N, 0)) + 1);
    for (int k = 1; k <= N; ++k) {
        mpz_class acc = 0;
        if (k <= d) acc = mpz_class(-k) * monic.coeff(d - k);
        const int top = std::min(k - 1, d);
        for (int i = 1; i <= top; ++i) acc -= monic.coeff(d - i) * p[static_cast<size_t>(k - i)];
        p[static_cast<size_t>(k)] = acc;
    }
    return std::vector<mpz_class>(p.begin() + 1, p.end());
}

} // namespace rswt
