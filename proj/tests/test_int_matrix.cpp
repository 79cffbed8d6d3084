#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "rswt/int_matrix.hpp"

using rswt::IntMatrix;

namespace {

IntMatrix random_matrix(std::mt19937& rng, int n, int max_abs) {
    std::uniform_int_distribution<int> coef(-max_abs, max_abs);
    IntMatrix m(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m.at(i, j) = coef(rng);
    return m;
}

// Leibniz determinant for tiny matrices: the independent oracle.
mpz_class det_leibniz(const IntMatrix& m) {
    const int n = static_cast<int>(m.size());
    std::vector<int> perm(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) perm[static_cast<size_t>(i)] = i;
    mpz_class det = 0;
    do {
        int inv = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (perm[static_cast<size_t>(i)] > perm[static_cast<size_t>(j)]) ++inv;
        mpz_class term = (inv % 2) ? -1 : 1;
        for (int i = 0; i < n; ++i) term *= m.at(i, perm[static_cast<size_t>(i)]);
        det += term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return det;
}

} // namespace

TEST_CASE("identity and multiply") {
    std::mt19937 rng(7);
    const IntMatrix a = random_matrix(rng, 5, 10);
    const IntMatrix i5 = IntMatrix::identity(5);
    CHECK(a * i5 == a);
    CHECK(i5 * a == a);
    CHECK((a - a).is_zero());
}

TEST_CASE("bareiss determinant matches Leibniz on random small matrices") {
    std::mt19937 rng(42);
    for (int it = 0; it < 60; ++it) {
        const int n = 1 + static_cast<int>(rng() % 5);
        const IntMatrix m = random_matrix(rng, n, 6);
        CHECK(rswt::bareiss_det(m) == det_leibniz(m));
    }
}

TEST_CASE("bareiss determinant handles zero pivots") {
    IntMatrix m(3);
    m.at(0, 1) = 1;
    m.at(1, 0) = 1;
    m.at(2, 2) = 5;
    CHECK(rswt::bareiss_det(m) == -5);
    IntMatrix z(3);
    CHECK(rswt::bareiss_det(z) == 0);
}

TEST_CASE("polynomial evaluation at a matrix") {
    IntMatrix a(2);
    a.at(0, 0) = 1;
    a.at(0, 1) = 1;
    a.at(1, 0) = 1;
    a.at(1, 1) = -1;
    // a^2 = 2I, so x^2 - 2 annihilates a.
    CHECK(rswt::eval_poly_at(rswt::IntPoly{{-2, 0, 1}}, a).is_zero());
    CHECK_FALSE(rswt::eval_poly_at(rswt::IntPoly{{-2, 1}}, a).is_zero());
}

TEST_CASE("sparse round trip and dense*sparse") {
    std::mt19937 rng(11);
    IntMatrix m(6);
    std::uniform_int_distribution<int> coef(-1, 2);
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) m.at(i, j) = coef(rng);
    const rswt::SparseIntMatrix s = rswt::to_sparse(m);
    CHECK(rswt::to_dense(s) == m);

    const IntMatrix d = random_matrix(rng, 6, 9);
    CHECK(rswt::mul_dense_sparse(d, s) == d * m);
    CHECK(rswt::eval_poly_at_sparse(rswt::IntPoly{{3, -1, 2}}, s) ==
          rswt::eval_poly_at(rswt::IntPoly{{3, -1, 2}}, m));
}
