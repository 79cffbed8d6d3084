#include "rswt/truth_table.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>

namespace rswt {

namespace {

// Bit-plane of variable x_{j+1} for a block of 64 consecutive inputs
// starting at `base` (base is a multiple of 64).  Lane l holds input
// base + l; variables beyond the low six are constant across the block.
constexpr std::array<uint64_t, 6> kLanePattern = {
    0xAAAAAAAAAAAAAAAAull, 0xCCCCCCCCCCCCCCCCull, 0xF0F0F0F0F0F0F0F0ull,
    0xFF00FF00FF00FF00ull, 0xFFFF0000FFFF0000ull, 0xFFFFFFFF00000000ull,
};

inline uint64_t plane_word(int j, uint64_t base) {
    if (j < 6) return kLanePattern[j];
    return ((base >> j) & 1u) ? ~uint64_t{0} : uint64_t{0};
}

void check_cap(int n, int cap, const char* what) {
    if (n > cap)
        throw CapExceeded(std::string(what) + ": n = " + std::to_string(n) +
                          " exceeds cap " + std::to_string(cap));
}

} // namespace

uint64_t brute_force_weight_serial(const FunctionInstance& f, int cap) {
    check_cap(f.n, cap, "brute_force_weight_serial");
    const uint64_t total = uint64_t{1} << f.n;
    uint64_t w = 0;
    for (uint64_t mask = 0; mask < total; ++mask) w += evaluate_mask(f, mask);
    return w;
}

uint64_t brute_force_weight(const FunctionInstance& f, int cap) {
    check_cap(f.n, cap, "brute_force_weight");
    const int n = f.n;
    if (n < 6) return brute_force_weight_serial(f, cap);

    const int64_t blocks = int64_t{1} << (n - 6);
    const auto& offsets = f.q.offsets();
    const int m = f.q.m();
    uint64_t weight = 0;

#pragma omp parallel for schedule(static) reduction(+ : weight)
    for (int64_t b = 0; b < blocks; ++b) {
        const uint64_t base = static_cast<uint64_t>(b) << 6;
        uint64_t plane[64];
        for (int j = 0; j < n; ++j) plane[j] = plane_word(j, base);
        uint64_t acc = 0;
        for (int g = 0; g < m; ++g) {
            const int k = offsets[g] - 1;
            for (int j = 0; j < n; ++j) acc ^= plane[j] & plane[(j + k) % n];
        }
        weight += static_cast<uint64_t>(__builtin_popcountll(acc));
    }
    return weight;
}

int32_t WalshSpectrum::max_abs() const {
    int32_t best = 0;
    for (int32_t v : values) best = std::max(best, v < 0 ? -v : v);
    return best;
}

uint64_t WalshSpectrum::parseval_sum() const {
    uint64_t s = 0;
    for (int32_t v : values) s += static_cast<uint64_t>(int64_t{v} * int64_t{v});
    return s;
}

WalshSpectrum walsh_spectrum(const FunctionInstance& f, int cap) {
    check_cap(f.n, cap, "walsh_spectrum");
    const int n = f.n;
    const int64_t size = int64_t{1} << n;

    WalshSpectrum spec;
    spec.n = n;
    spec.values.resize(static_cast<size_t>(size));
    int32_t* v = spec.values.data();

    // Sign vector (-1)^f(x), filled 64 inputs at a time.
    if (n < 6) {
        for (int64_t x = 0; x < size; ++x)
            v[x] = evaluate_mask(f, static_cast<uint64_t>(x)) ? -1 : 1;
    } else {
        const int64_t blocks = size >> 6;
        const auto& offsets = f.q.offsets();
        const int m = f.q.m();
#pragma omp parallel for schedule(static)
        for (int64_t b = 0; b < blocks; ++b) {
            const uint64_t base = static_cast<uint64_t>(b) << 6;
            uint64_t plane[64];
            for (int j = 0; j < n; ++j) plane[j] = plane_word(j, base);
            uint64_t acc = 0;
            for (int g = 0; g < m; ++g) {
                const int k = offsets[g] - 1;
                for (int j = 0; j < n; ++j) acc ^= plane[j] & plane[(j + k) % n];
            }
            for (int l = 0; l < 64; ++l) v[base + l] = ((acc >> l) & 1u) ? -1 : 1;
        }
    }

    // In-place butterfly.  Integer ops are exact, so thread partitioning
    // cannot change the result.
    for (int s = 0; s < n; ++s) {
        const int64_t half = int64_t{1} << s;
        const int64_t step = half << 1;
#pragma omp parallel for schedule(static)
        for (int64_t blk = 0; blk < size / step; ++blk) {
            const int64_t lo = blk * step;
            for (int64_t j = lo; j < lo + half; ++j) {
                const int32_t a = v[j];
                const int32_t b = v[j + half];
                v[j] = a + b;
                v[j + half] = a - b;
            }
        }
    }
    return spec;
}

std::vector<int64_t> walsh_spectrum_reference(const FunctionInstance& f) {
    check_cap(f.n, 14, "walsh_spectrum_reference");
    const int64_t size = int64_t{1} << f.n;
    std::vector<int64_t> out(static_cast<size_t>(size), 0);
    for (int64_t u = 0; u < size; ++u) {
        int64_t sum = 0;
        for (int64_t x = 0; x < size; ++x) {
            const int fx = evaluate_mask(f, static_cast<uint64_t>(x));
            const int dot = __builtin_popcountll(static_cast<uint64_t>(u & x)) & 1;
            sum += ((fx ^ dot) ? -1 : 1);
        }
        out[static_cast<size_t>(u)] = sum;
    }
    return out;
}

uint64_t nonlinearity(const FunctionInstance& f, int cap) {
    const WalshSpectrum spec = walsh_spectrum(f, cap);
    return (uint64_t{1} << (f.n - 1)) - static_cast<uint64_t>(spec.max_abs()) / 2;
}

bool affine_equivalent_quadratics(const FunctionInstance& f, const FunctionInstance& g, int cap) {
    if (f.n != g.n)
        throw ParseError("affine equivalence needs matching n: " + std::to_string(f.n) + " vs " +
                         std::to_string(g.n));
    const WalshSpectrum sf = walsh_spectrum(f, cap);
    const WalshSpectrum sg = walsh_spectrum(g, cap);
    const int64_t wf = ((int64_t{1} << f.n) - sf.values[0]) / 2;
    const int64_t wg = ((int64_t{1} << g.n) - sg.values[0]) / 2;
    if (wf != wg) return false;
    return sf.max_abs() == sg.max_abs();
}

} // namespace rswt
