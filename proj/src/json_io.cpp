#include "rswt/json_io.hpp"

namespace rswt {

using nlohmann::json;

json poly_to_json(const IntPoly& p) {
    json arr = json::array();
    for (const auto& c : p.coeffs()) arr.push_back(c.get_str());
    return arr;
}

json matrix_to_json(const IntMatrix& m) {
    json rows = json::array();
    for (int64_t i = 0; i < m.size(); ++i) {
        json row = json::array();
        for (int64_t j = 0; j < m.size(); ++j) row.push_back(m.at(i, j).get_si());
        rows.push_back(std::move(row));
    }
    return rows;
}

json matrix_to_json(const SparseIntMatrix& m) {
    json rows = json::array();
    for (int64_t i = 0; i < m.n; ++i) {
        json row = json::array();
        int64_t col = 0;
        for (const auto& [j, v] : m.rows[static_cast<size_t>(i)]) {
            for (; col < j; ++col) row.push_back(0);
            row.push_back(static_cast<int>(v));
            ++col;
        }
        for (; col < m.n; ++col) row.push_back(0);
        rows.push_back(std::move(row));
    }
    return rows;
}

json index_sets_to_json(const IndexSets& idx) {
    json j;
    j["y"] = idx.y;
    j["X"] = idx.X;
    j["S"] = idx.S;
    j["parity"] = idx.parity;
    return j;
}

json rules_to_json(const RulesArtifacts& a, bool include_expanded) {
    json j;
    j["spec"] = a.q.to_spec();
    j["T"] = a.q.T();
    j["index_sets"] = index_sets_to_json(a.index_sets);
    j["expanded_size"] = a.expanded.n;
    j["reduction_passes"] = a.reduction_passes;
    j["kept_indices"] = a.kept;
    j["rules"] = matrix_to_json(a.rules);
    j["Rules"] = matrix_to_json(a.Rules);
    if (include_expanded) j["expanded"] = matrix_to_json(a.expanded);
    return j;
}

json ecc_report_to_json(const ECCReport& rep) {
    json j;
    j["spec"] = rep.q.to_spec();
    j["n_max"] = rep.n_max;
    j["min_poly"] = poly_to_json(rep.min_poly);
    j["char_poly"] = poly_to_json(rep.char_poly);
    j["min_equals_char"] = rep.min_equals_char;
    j["eect_applicable"] = rep.min_equals_char;
    j["holds"] = rep.holds;
    if (!rep.notes.empty()) j["notes"] = rep.notes;
    json rows = json::array();
    for (const auto& r : rep.rows) {
        json row;
        row["n"] = r.n;
        row["trace"] = r.trace_weight.get_str();
        row["recursion"] = r.recursion_weight.get_str();
        if (r.brute_weight) row["brute"] = r.brute_weight->get_str();
        row["agree"] = r.agree;
        rows.push_back(std::move(row));
    }
    j["rows"] = std::move(rows);
    return j;
}

json gf_to_json(const RationalGF& gf) {
    json j;
    j["num"] = poly_to_json(gf.num);
    j["den"] = poly_to_json(gf.den);
    return j;
}

json plateaued_to_json(const PlateauedForm& f) {
    json j;
    j["balanced"] = f.balanced;
    if (!f.balanced) {
        j["sign"] = f.sign;
        j["v"] = f.v;
    }
    return j;
}

} // namespace rswt
