#pragma once

#include "rswt/int_matrix.hpp"
#include "rswt/int_poly.hpp"

namespace rswt {

// Exact characteristic polynomial (monic, degree = size).  Dispatches on
// size: Faddeev-LeVerrier over Z for small matrices, CRT over word-size
// primes (Hessenberg form mod p, rigorous Hadamard coefficient bound) for
// large ones.  Both routes are exact and deterministic.
IntPoly char_poly(const IntMatrix& m);

// The two routes, exposed so tests can cross-check them.
IntPoly char_poly_faddeev(const IntMatrix& m);
IntPoly char_poly_crt(const SparseIntMatrix& m);

// Minimal polynomial of a matrix whose minimal polynomial is squarefree
// (true for rules matrices: (1/sqrt2) * Rules is orthogonal, hence
// diagonalizable).  Computed as the squarefree part of the characteristic
// polynomial and verified by exact substitution p(M) = 0; throws
// VerificationError if the matrix is not diagonalizable after all.
IntPoly min_poly(const IntMatrix& m);
IntPoly min_poly(const IntMatrix& m, const IntPoly& charpoly);

// Power sums p_k = sum of roots^k (with multiplicity) of a monic integer
// polynomial, k = 1..N: Newton's identities up to the degree, then the
// coefficient recursion.
std::vector<mpz_class> power_sums(const IntPoly& monic, int N);

} // namespace rswt
