#pragma once

#include <string>
#include <vector>

#include "rswt/weights.hpp"

namespace rswt {

enum class SweepFormat { Text, Csv, Json };

struct SweepConfig {
    int t1_max = 5;
    int m_max = 3;
    long n_max = 24;
    int brute_cap = Limits{}.brute_cap;
    SweepFormat format = SweepFormat::Text;
    int workers = 0; // 0 = library default
};

struct SweepRow {
    std::string spec;
    int T = 0;
    int deg_min = 0;
    bool min_eq_char = false;
    bool ecc_holds = false;
    int max_v = -1; // -1 when every window weight was balanced (does not occur in practice)
    int two_T = 0;
    std::string error; // nonempty when analysis failed (e.g. cap exceeded)
};

// Every nonempty subset of {2..t1_max} with at most m_max elements, in a
// fixed enumeration order.  Offsets are listed decreasing.
std::vector<QuadraticRS> enumerate_family(int t1_max, int m_max);

// Runs the per-function analysis in parallel; the returned rows follow the
// enumeration order regardless of worker count.
std::vector<SweepRow> run_sweep(const SweepConfig& cfg);

std::string sweep_csv(const std::vector<SweepRow>& rows);
std::string sweep_json(const std::vector<SweepRow>& rows);
std::string sweep_text(const std::vector<SweepRow>& rows);

} // namespace rswt
