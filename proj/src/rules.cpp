#include "rswt/rules.hpp"

#include <algorithm>
#include <numeric>

namespace rswt {

namespace {

// Largest supported exponent for the expanded matrix: 2^20 + 1 rows.
constexpr int kMaxExpandedLog = 20;

int64_t reduced_target_size(const QuadraticRS& q) { return (int64_t{1} << q.T()) + 1; }

} // namespace

int bit_at(uint64_t b, int k) { return static_cast<int>((b >> k) & 1u); }

IndexSets build_index_sets(std::span<const int> offsets) {
    const int m = static_cast<int>(offsets.size());
    if (m == 0) throw ConstructionError("index sets need at least one offset");

    IndexSets out;
    out.y.resize(static_cast<size_t>(m) + 1);
    out.y[0] = 0;
    for (int k = 1; k <= m; ++k)
        out.y[static_cast<size_t>(k)] =
            out.y[static_cast<size_t>(k - 1)] + (offsets[static_cast<size_t>(m - k)] - 1);

    out.X.resize(static_cast<size_t>(m));
    for (int k = 1; k <= m; ++k) {
        const int e = out.y[static_cast<size_t>(k)] - 1;
        if (e < 0 || e >= 63) throw ConstructionError("index-set exponent out of range");
        out.X[static_cast<size_t>(k - 1)] = uint64_t{1} << e;
    }

    const int count = 1 << m;
    std::vector<std::pair<uint64_t, int>> sums;
    sums.reserve(static_cast<size_t>(count));
    for (int mask = 0; mask < count; ++mask) {
        uint64_t s = 0;
        for (int b = 0; b < m; ++b)
            if (mask & (1 << b)) s += out.X[static_cast<size_t>(b)];
        sums.emplace_back(s, __builtin_popcount(static_cast<unsigned>(mask)) & 1);
    }
    std::sort(sums.begin(), sums.end());
    for (size_t i = 1; i < sums.size(); ++i)
        if (sums[i].first == sums[i - 1].first)
            throw ConstructionError("subset sums are not distinct");
    out.S.reserve(sums.size());
    out.parity.reserve(sums.size());
    for (auto& [s, par] : sums) {
        out.S.push_back(s);
        out.parity.push_back(par);
    }
    return out;
}

SparseIntMatrix expanded_rules_matrix(std::span<const int> offsets) {
    const IndexSets idx = build_index_sets(offsets);
    const int m = static_cast<int>(offsets.size());
    const int ym = idx.y.back();
    if (ym > kMaxExpandedLog)
        throw CapExceeded("expanded rules matrix would have 2^" + std::to_string(ym) +
                          "+1 rows; supported maximum is 2^" + std::to_string(kMaxExpandedLog) +
                          "+1");

    const int64_t big = int64_t{1} << ym;
    SparseIntMatrix e(big + 1);
    std::vector<uint8_t> col_has_minus(static_cast<size_t>(big), 0);

    for (int64_t i = 0; i < big; ++i) {
        bool all_zero = true, all_one = true;
        for (int k = 0; k < m; ++k) {
            const int b = bit_at(static_cast<uint64_t>(i), idx.y[static_cast<size_t>(k)]);
            all_zero &= (b == 0);
            all_one &= (b == 1);
        }
        if (!all_zero && !all_one) continue;

        auto& row = e.rows[static_cast<size_t>(i)];
        row.reserve(idx.S.size());
        const int64_t base = i >> 1;
        if (all_zero) {
            for (uint64_t s : idx.S) {
                const int64_t j = base + static_cast<int64_t>(s);
                if (j < 0 || j >= big)
                    throw ConstructionError("plus-rule target out of range: the construction "
                                            "never wraps these indices");
                row.emplace_back(j, int8_t{1});
            }
        } else {
            // Subtracting 2^(y_k - 1) flips the incoming bit at the top of
            // block k.  Blocks below the top one carry a leaked 1 there, the
            // top block a 0, so the new-bit vector of the target has weight
            // (m - 1 - |u cap lower|) + [top element in u]; its parity, not
            // the raw subset parity, is the sign.  The two coincide for odd
            // m, which covers every worked example, but for even m the raw
            // rule fails brute-force validation on every function.
            for (size_t si = 0; si < idx.S.size(); ++si) {
                int64_t j = (base - static_cast<int64_t>(idx.S[si])) % big;
                if (j < 0) j += big;
                const int flip = (idx.parity[si] + m - 1) & 1;
                const int8_t v = flip ? int8_t{-1} : int8_t{1};
                row.emplace_back(j, v);
                if (v < 0) col_has_minus[static_cast<size_t>(j)] = 1;
            }
            std::sort(row.begin(), row.end());
        }
    }

    auto& last = e.rows[static_cast<size_t>(big)];
    for (int64_t j = 0; j < big; ++j)
        if (col_has_minus[static_cast<size_t>(j)]) last.emplace_back(j, int8_t{1});
    last.emplace_back(big, int8_t{2});
    return e;
}

ReduceResult reduce(const SparseIntMatrix& expanded) {
    ReduceResult out;
    out.kept.resize(static_cast<size_t>(expanded.n));
    std::iota(out.kept.begin(), out.kept.end(), int64_t{0});

    SparseIntMatrix cur = expanded;
    while (true) {
        std::vector<int64_t> keep;
        keep.reserve(static_cast<size_t>(cur.n));
        for (int64_t i = 0; i < cur.n; ++i)
            if (!cur.rows[static_cast<size_t>(i)].empty()) keep.push_back(i);
        if (static_cast<int64_t>(keep.size()) == cur.n) break;

        ++out.passes;
        std::vector<int64_t> remap(static_cast<size_t>(cur.n), -1);
        for (size_t ni = 0; ni < keep.size(); ++ni) remap[static_cast<size_t>(keep[ni])] =
            static_cast<int64_t>(ni);

        SparseIntMatrix next(static_cast<int64_t>(keep.size()));
        for (size_t ni = 0; ni < keep.size(); ++ni) {
            for (const auto& [j, v] : cur.rows[static_cast<size_t>(keep[ni])]) {
                const int64_t nj = remap[static_cast<size_t>(j)];
                if (nj >= 0) next.rows[ni].emplace_back(nj, v);
            }
        }
        std::vector<int64_t> new_kept(keep.size());
        for (size_t ni = 0; ni < keep.size(); ++ni)
            new_kept[ni] = out.kept[static_cast<size_t>(keep[ni])];
        out.kept = std::move(new_kept);
        cur = std::move(next);
    }
    out.matrix = std::move(cur);
    return out;
}

RulesArtifacts rules_matrix(const QuadraticRS& q) {
    RulesArtifacts a;
    a.q = q;
    a.index_sets = build_index_sets(q.offsets());
    a.expanded = expanded_rules_matrix(q.offsets());

    ReduceResult red = reduce(a.expanded);
    if (red.matrix.n != reduced_target_size(q))
        throw ConstructionError("reduced rules matrix has size " + std::to_string(red.matrix.n) +
                                ", expected 2^T+1 = " + std::to_string(reduced_target_size(q)));
    a.rules = to_dense(red.matrix);
    a.kept = std::move(red.kept);
    a.reduction_passes = red.passes;

    const int64_t rn = a.rules.size();
    a.Rules = IntMatrix(rn - 1);
    for (int64_t i = 0; i + 1 < rn; ++i)
        for (int64_t j = 0; j + 1 < rn; ++j) a.Rules.at(i, j) = a.rules.at(i, j);
    return a;
}

IntMatrix rules_matrix_for_order(std::span<const int> offsets) {
    const SparseIntMatrix expanded = expanded_rules_matrix(offsets);
    ReduceResult red = reduce(expanded);
    return to_dense(red.matrix);
}

} // namespace rswt
