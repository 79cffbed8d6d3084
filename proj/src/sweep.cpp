#include "rswt/sweep.hpp"

#include <json.hpp>

#include <sstream>

namespace rswt {

std::vector<QuadraticRS> enumerate_family(int t1_max, int m_max) {
    std::vector<QuadraticRS> out;
    const int span = t1_max - 1; // candidate offsets 2..t1_max
    if (span <= 0) return out;
    for (unsigned mask = 1; mask < (1u << span); ++mask) {
        if (__builtin_popcount(mask) > m_max) continue;
        std::vector<int> offsets;
        for (int b = 0; b < span; ++b)
            if (mask & (1u << b)) offsets.push_back(b + 2);
        out.push_back(QuadraticRS::from_offsets(std::move(offsets)));
    }
    return out;
}

std::vector<SweepRow> run_sweep(const SweepConfig& cfg) {
    const std::vector<QuadraticRS> family = enumerate_family(cfg.t1_max, cfg.m_max);
    std::vector<SweepRow> rows(family.size());
    Limits limits;
    limits.brute_cap = cfg.brute_cap;

    const int count = static_cast<int>(family.size());
#pragma omp parallel for schedule(dynamic)
    for (int i = 0; i < count; ++i) {
        const QuadraticRS& q = family[static_cast<size_t>(i)];
        SweepRow& row = rows[static_cast<size_t>(i)];
        row.spec = q.to_spec();
        row.T = q.T();
        row.two_T = 2 * q.T();
        try {
            const RulesArtifacts art = rules_matrix(q);
            const IntPoly cp = char_poly(art.rules);
            const IntPoly mp = min_poly(art.rules, cp);
            row.deg_min = mp.degree();
            row.min_eq_char = (mp == cp);
            const FunctionAnalysis a = analyze(q, limits);
            row.ecc_holds = verify_ecc(a, cfg.n_max, limits).holds;
            const std::optional<int> v = max_v(a, 4 * q.t1());
            row.max_v = v.value_or(-1);
        } catch (const std::exception& e) {
            row.error = e.what();
        }
    }
    return rows;
}

namespace {

std::string quoted(const std::string& s) { return '"' + s + '"'; }

} // namespace

std::string sweep_csv(const std::vector<SweepRow>& rows) {
    std::ostringstream out;
    out << "spec,T,deg_min,min_eq_char,ecc_holds,max_v,two_T,error\n";
    for (const auto& r : rows) {
        out << quoted(r.spec) << ',' << r.T << ',' << r.deg_min << ','
            << (r.min_eq_char ? "true" : "false") << ',' << (r.ecc_holds ? "true" : "false")
            << ',' << r.max_v << ',' << r.two_T << ',' << quoted(r.error) << '\n';
    }
    return out.str();
}

std::string sweep_json(const std::vector<SweepRow>& rows) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : rows) {
        nlohmann::json j;
        j["spec"] = r.spec;
        j["T"] = r.T;
        j["deg_min"] = r.deg_min;
        j["min_eq_char"] = r.min_eq_char;
        j["ecc_holds"] = r.ecc_holds;
        j["max_v"] = r.max_v;
        j["two_T"] = r.two_T;
        if (!r.error.empty()) j["error"] = r.error;
        arr.push_back(std::move(j));
    }
    return arr.dump(2) + "\n";
}

std::string sweep_text(const std::vector<SweepRow>& rows) {
    std::ostringstream out;
    out << "spec                      T  deg(min)  min=char  ecc  max_v  2T\n";
    for (const auto& r : rows) {
        std::string spec = r.spec;
        if (spec.size() < 24) spec += std::string(24 - spec.size(), ' ');
        out << spec << "  " << r.T << "  " << r.deg_min << "  "
            << (r.min_eq_char ? "yes" : "no ") << "  " << (r.ecc_holds ? "ok " : "FAIL") << "  "
            << r.max_v << "  " << r.two_T;
        if (!r.error.empty()) out << "  error: " << r.error;
        out << '\n';
    }
    return out.str();
}

} // namespace rswt
