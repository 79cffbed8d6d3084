#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "rswt/function.hpp"
#include "rswt/int_matrix.hpp"

namespace rswt {

// Index machinery behind the expanded rules matrix.
//  y:      y_0 = 0, y_k = sum of (t_{m-i+1} - 1) for i = 1..k
//  X:      { 2^(y_k - 1) : 1 <= k <= m }, distinct powers of two
//  S:      all 2^m subset sums of X, ascending
//  parity: parity of the subset cardinality behind each sum (subset sums
//          are distinct, so this is well defined)
struct IndexSets {
    std::vector<int> y;
    std::vector<uint64_t> X;
    std::vector<uint64_t> S;
    std::vector<int> parity; // parity[i] in {0,1} for S[i]
};

// Offsets are taken in the order given; the canonical decreasing order
// yields the paired-row layout, other orders are used to check that the
// characteristic polynomial is order-invariant.
IndexSets build_index_sets(std::span<const int> offsets_in_order);

// k-th bit of b: floor(b/2^k) - 2*floor(b/2^(k+1)).
int bit_at(uint64_t b, int k);

// Expanded rules matrix of size 2^(y_m) + 1.  Row i < 2^(y_m):
//  * all bits of i at positions y_0..y_(m-1) zero: +1 at floor(i/2) + s for
//    every s in S (these targets are always in range; a violation aborts);
//  * all those bits one: +-1 at (floor(i/2) - s) mod 2^(y_m), sign given by
//    the parity of the subset behind s shifted by m - 1 (the parity of the
//    per-generator new-bit vector the subtraction encodes);
//  * anything else: zero row.
// Last row: 1 in every column that received a -1.  Last column: zero except
// the bottom-right 2.
SparseIntMatrix expanded_rules_matrix(std::span<const int> offsets_in_order);

struct ReduceResult {
    SparseIntMatrix matrix;
    std::vector<int64_t> kept; // surviving indices of the input matrix
    int passes = 0;
};

// Repeatedly deletes all currently-zero rows together with the same-indexed
// columns until no zero rows remain.  Each single deletion multiplies the
// characteristic polynomial by exactly x.
ReduceResult reduce(const SparseIntMatrix& expanded);

struct RulesArtifacts {
    QuadraticRS q;
    IndexSets index_sets;
    SparseIntMatrix expanded;
    IntMatrix rules;           // size 2^T + 1
    IntMatrix Rules;           // rules without the last row and column
    std::vector<int64_t> kept; // expanded-matrix indices surviving reduction
    int reduction_passes = 0;
};

// Full pipeline for the canonical (decreasing) offset order.  Aborts with
// ConstructionError if the reduced matrix does not have size 2^T + 1.
RulesArtifacts rules_matrix(const QuadraticRS& q);

// Same pipeline for an arbitrary offset order (no canonical-order checks).
IntMatrix rules_matrix_for_order(std::span<const int> offsets_in_order);

} // namespace rswt
