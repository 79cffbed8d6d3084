#pragma once

#include <cstdint>
#include <vector>

#include "rswt/function.hpp"

namespace rswt {

// Enumeration caps.  These are configuration, not hard constants; the
// defaults keep the full verification suite within minutes.
struct Limits {
    int brute_cap = 30;        // max n for 2^n truth-table enumeration
    int walsh_cap = 24;        // max n for a full Walsh spectrum in memory
    int validation_points = 4; // recursions are validated on d + this many points
};

// Exact truth-table weight by bitsliced enumeration: 64 inputs per word,
// O(m*n*2^n/64) word operations, OpenMP across blocks.
// Throws CapExceeded when n > cap.
uint64_t brute_force_weight(const FunctionInstance& f, int cap = Limits{}.brute_cap);

// Scalar reference path: evaluates inputs one at a time.  Kept as the
// independent check for the bitsliced kernel.
uint64_t brute_force_weight_serial(const FunctionInstance& f, int cap = Limits{}.brute_cap);

struct WalshSpectrum {
    int n = 0;
    std::vector<int32_t> values; // values[u] = sum_x (-1)^(f(x) + u.x)

    int32_t max_abs() const;
    // Exactly 2^(2n); overflows nothing for n <= 30.
    uint64_t parseval_sum() const;
};

// Fast transform, O(n*2^n), butterfly stages parallelized for large n.
WalshSpectrum walsh_spectrum(const FunctionInstance& f, int cap = Limits{}.walsh_cap);

// Direct O(4^n) evaluation of the defining sum; reference for small n.
std::vector<int64_t> walsh_spectrum_reference(const FunctionInstance& f);

// N(f) = 2^(n-1) - max_u |W_f(u)| / 2.
uint64_t nonlinearity(const FunctionInstance& f, int cap = Limits{}.walsh_cap);

// Quadratic criterion: f ~ g iff wt(f) = wt(g) and N(f) = N(g).
// Requires f.n == g.n.
bool affine_equivalent_quadratics(const FunctionInstance& f, const FunctionInstance& g,
                                  int cap = Limits{}.walsh_cap);

} // namespace rswt
