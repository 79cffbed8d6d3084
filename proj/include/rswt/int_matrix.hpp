#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

#include "rswt/errors.hpp"
#include "rswt/int_poly.hpp"

namespace rswt {

// Dense square matrix over Z.
class IntMatrix {
public:
    IntMatrix() = default;
    explicit IntMatrix(int64_t n) : n_(n), e_(static_cast<size_t>(n) * n, 0) {}

    static IntMatrix identity(int64_t n);

    int64_t size() const { return n_; }
    mpz_class& at(int64_t i, int64_t j) { return e_[static_cast<size_t>(i * n_ + j)]; }
    const mpz_class& at(int64_t i, int64_t j) const { return e_[static_cast<size_t>(i * n_ + j)]; }

    bool operator==(const IntMatrix&) const = default;

    bool is_zero() const;
    mpz_class trace() const;
    IntMatrix transpose() const;
    IntMatrix operator*(const IntMatrix& o) const;
    IntMatrix operator+(const IntMatrix& o) const;
    IntMatrix operator-(const IntMatrix& o) const;
    IntMatrix operator*(const mpz_class& k) const;
    IntMatrix pow(int e) const;

    // Drops row/column `idx`.
    IntMatrix minor_without(int64_t idx) const;

    // Aligned grid for terminal display.
    std::string to_grid() const;

private:
    int64_t n_ = 0;
    std::vector<mpz_class> e_;
};

// Fraction-free Bareiss elimination; exact.
mpz_class bareiss_det(const IntMatrix& m);

// p(M) by Horner; exact.
IntMatrix eval_poly_at(const IntPoly& p, const IntMatrix& m);

// Square sparse matrix with entries in {-1, 0, 1, 2}; rows hold sorted
// (column, value) pairs.  Used for the expanded rules matrix, which is too
// large and too sparse to keep dense.
struct SparseIntMatrix {
    int64_t n = 0;
    std::vector<std::vector<std::pair<int64_t, int8_t>>> rows;

    explicit SparseIntMatrix(int64_t size = 0) : n(size), rows(static_cast<size_t>(size)) {}
    int64_t nonzero_count() const;
};

IntMatrix to_dense(const SparseIntMatrix& s);
SparseIntMatrix to_sparse(const IntMatrix& m);

// dense * sparse, exact; used to evaluate polynomials at a sparse matrix.
IntMatrix mul_dense_sparse(const IntMatrix& a, const SparseIntMatrix& b);
IntMatrix eval_poly_at_sparse(const IntPoly& p, const SparseIntMatrix& m);

} // namespace rswt
