// rswt: exact weight recursions and rules matrices for quadratic
// rotation-symmetric Boolean functions.
//
// Subcommands: matrix | poly | weights | ecc | genfunc | spectrum | sweep
// Exit codes: 0 ok, 1 verification disagreement, 2 usage or parse error.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <iostream>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "rswt/genfunc.hpp"
#include "rswt/json_io.hpp"
#include "rswt/sweep.hpp"
#include "rswt/truth_table.hpp"
#include "rswt/weights.hpp"

using nlohmann::json;

namespace {

struct GlobalOpts {
    bool as_json = false;
    bool as_csv = false;
    int brute_cap = rswt::Limits{}.brute_cap;
    int precision = 40;
    int workers = 0;
};

rswt::Limits limits_of(const GlobalOpts& g) {
    rswt::Limits l;
    l.brute_cap = g.brute_cap;
    return l;
}

int cmd_matrix(const std::string& spec, bool expanded, const GlobalOpts& g) {
    const rswt::QuadraticRS q = rswt::parse_function(spec);
    const rswt::RulesArtifacts art = rswt::rules_matrix(q);
    if (g.as_json) {
        std::cout << rswt::rules_to_json(art, expanded).dump(2) << '\n';
        return 0;
    }
    std::cout << "function " << q.to_spec() << "  T=" << q.T() << '\n';
    std::cout << "y = (";
    for (size_t i = 0; i < art.index_sets.y.size(); ++i)
        std::cout << (i ? "," : "") << art.index_sets.y[i];
    std::cout << ")\nX = {";
    for (size_t i = 0; i < art.index_sets.X.size(); ++i)
        std::cout << (i ? "," : "") << art.index_sets.X[i];
    std::cout << "}\nS = {";
    for (size_t i = 0; i < art.index_sets.S.size(); ++i)
        std::cout << (i ? "," : "") << art.index_sets.S[i];
    std::cout << "}\n";
    std::cout << "expanded size " << art.expanded.n << ", reduction passes "
              << art.reduction_passes << '\n';
    if (expanded) {
        std::cout << "expanded rules matrix:\n" << rswt::to_dense(art.expanded).to_grid();
    }
    std::cout << "rules matrix (size " << art.rules.size() << "):\n" << art.rules.to_grid();
    std::cout << "Rules matrix (size " << art.Rules.size() << "):\n" << art.Rules.to_grid();
    return 0;
}

int cmd_poly(const std::string& spec, const GlobalOpts& g) {
    const rswt::QuadraticRS q = rswt::parse_function(spec);
    const rswt::RulesArtifacts art = rswt::rules_matrix(q);
    const rswt::IntPoly cp = rswt::char_poly(art.rules);
    const rswt::IntPoly mp = rswt::min_poly(art.rules, cp);
    const int mult_min = rswt::root_multiplicity(mp, 2);
    const int mult_char = rswt::root_multiplicity(cp, 2);
    if (g.as_json) {
        json j;
        j["spec"] = q.to_spec();
        j["char_poly"] = rswt::poly_to_json(cp);
        j["min_poly"] = rswt::poly_to_json(mp);
        j["char_pretty"] = cp.to_string();
        j["min_pretty"] = mp.to_string();
        j["min_equals_char"] = (cp == mp);
        j["x_minus_2_multiplicity_min"] = mult_min;
        j["x_minus_2_multiplicity_char"] = mult_char;
        std::cout << j.dump(2) << '\n';
        return 0;
    }
    std::cout << "function " << q.to_spec() << '\n';
    std::cout << "char poly: " << cp.to_string() << '\n';
    std::cout << "min poly:  " << mp.to_string() << '\n';
    std::cout << "min = char: " << (cp == mp ? "yes" : "no") << '\n';
    std::cout << "(x-2) divides min exactly once: " << (mult_min == 1 ? "yes" : "NO") << '\n';
    std::cout << "(x-2) divides char exactly once: " << (mult_char == 1 ? "yes" : "NO") << '\n';
    return 0;
}

int cmd_weights(const std::string& spec, long n_from, long n_to, const std::string& method,
                const GlobalOpts& g) {
    if (n_from < 1 || n_to < n_from) throw CLI::ValidationError("need 1 <= n_from <= n_to");
    const rswt::QuadraticRS q = rswt::parse_function(spec);
    const rswt::Limits limits = limits_of(g);
    const rswt::FunctionAnalysis a = rswt::analyze(q, limits);
    for (const auto& w : a.recurrence.warnings) std::cerr << "warning: " << w << '\n';

    const std::vector<mpz_class> by_rec = rswt::weights_prefix(a, n_to);
    std::vector<std::pair<long, mpz_class>> rows;
    for (long n = n_from; n <= n_to; ++n) {
        mpz_class w;
        if (method == "recursion") {
            w = by_rec[static_cast<size_t>(n - 1)];
        } else if (method == "trace") {
            w = rswt::weight_by_trace(a, n);
        } else if (method == "roots") {
            w = rswt::weight_by_roots(a, n, g.precision);
        } else if (method == "brute") {
            if (n >= q.t1() && n <= limits.brute_cap) {
                w = rswt::brute_force_weight(rswt::FunctionInstance(q, static_cast<int>(n)),
                                             limits.brute_cap);
            } else if (n < q.t1()) {
                // The function does not exist below t_1; report the
                // backward-extension convention value instead.
                w = by_rec[static_cast<size_t>(n - 1)];
            } else {
                throw rswt::CapExceeded("brute force beyond cap at n = " + std::to_string(n));
            }
        } else {
            throw CLI::ValidationError("unknown method '" + method + "'");
        }
        rows.emplace_back(n, std::move(w));
    }

    auto kind = [&](long n) { return n < q.t1() ? "extended" : "defined"; };
    if (g.as_json) {
        json j;
        j["spec"] = q.to_spec();
        j["method"] = method;
        json arr = json::array();
        for (const auto& [n, w] : rows) {
            json row;
            row["n"] = n;
            row["weight"] = w.get_str();
            row["kind"] = kind(n);
            arr.push_back(std::move(row));
        }
        j["rows"] = std::move(arr);
        std::cout << j.dump(2) << '\n';
    } else if (g.as_csv) {
        std::cout << "n,weight,kind\n";
        for (const auto& [n, w] : rows)
            std::cout << n << ',' << w.get_str() << ',' << kind(n) << '\n';
    } else {
        std::cout << "weights of " << q.to_spec() << " (method: " << method << ")\n";
        for (const auto& [n, w] : rows)
            std::cout << "  n=" << n << "  " << w.get_str() << "  [" << kind(n) << "]\n";
    }
    return 0;
}

int cmd_ecc(const std::string& spec, long n_max, const GlobalOpts& g) {
    const rswt::QuadraticRS q = rswt::parse_function(spec);
    const rswt::ECCReport rep = rswt::verify_ecc(q, n_max, limits_of(g));
    if (g.as_json) {
        std::cout << rswt::ecc_report_to_json(rep).dump(2) << '\n';
    } else {
        std::cout << "function " << q.to_spec() << ", n = 1.." << n_max << '\n';
        std::cout << "min poly:  " << rep.min_poly.to_string() << '\n';
        std::cout << "char poly: " << rep.char_poly.to_string() << '\n';
        std::cout << "min = char (identity proven in that case): "
                  << (rep.min_equals_char ? "yes" : "no") << '\n';
        for (const auto& r : rep.rows) {
            std::cout << "  n=" << r.n << "  trace=" << r.trace_weight.get_str()
                      << "  recursion=" << r.recursion_weight.get_str();
            if (r.brute_weight) std::cout << "  brute=" << r.brute_weight->get_str();
            std::cout << (r.agree ? "" : "  MISMATCH") << '\n';
        }
        for (const auto& note : rep.notes) std::cout << "note: " << note << '\n';
        std::cout << (rep.holds ? "all methods agree\n" : "DISAGREEMENT FOUND\n");
        if (!rep.holds && !rep.min_equals_char)
            std::cout << "min != char here, so a genuine disagreement would be a conjecture "
                         "counterexample; report it\n";
        else if (!rep.holds)
            std::cout << "min = char here, so this disagreement is a software bug\n";
    }
    return rep.holds ? 0 : 1;
}

int cmd_genfunc(const std::string& spec, int n_terms, const GlobalOpts& g) {
    const rswt::QuadraticRS q = rswt::parse_function(spec);
    const rswt::FunctionAnalysis a = rswt::analyze(q, limits_of(g));
    const rswt::RationalGF gf = rswt::generating_function(a);
    const std::vector<mpz_class> series = rswt::expand_series(gf, n_terms);
    if (g.as_json) {
        json j = rswt::gf_to_json(gf);
        j["spec"] = q.to_spec();
        json s = json::array();
        for (const auto& w : series) s.push_back(w.get_str());
        j["series"] = std::move(s);
        j["pretty"] = "(" + gf.num.to_string() + ") / (" + gf.den.to_string() + ")";
        std::cout << j.dump(2) << '\n';
    } else {
        std::cout << "gen(" << q.to_spec() << ")(x) = (" << gf.num.to_string() << ") / ("
                  << gf.den.to_string() << ")\n";
        std::cout << "series coefficients w_1..w_" << n_terms << ":";
        for (const auto& w : series) std::cout << ' ' << w.get_str();
        std::cout << '\n';
    }
    return 0;
}

int cmd_spectrum(const std::string& spec, int n, const GlobalOpts& g) {
    const rswt::QuadraticRS q = rswt::parse_function(spec);
    const rswt::FunctionInstance f(q, n);
    const rswt::WalshSpectrum ws = rswt::walsh_spectrum(f, g.brute_cap > rswt::Limits{}.walsh_cap
                                                               ? g.brute_cap
                                                               : rswt::Limits{}.walsh_cap);
    const uint64_t weight = ((uint64_t{1} << n) - static_cast<uint64_t>(ws.values[0])) / 2;
    const int32_t wmax = ws.max_abs();
    const uint64_t nl = (uint64_t{1} << (n - 1)) - static_cast<uint64_t>(wmax) / 2;
    const rswt::PlateauedForm pf = rswt::plateaued_decompose(n, mpz_class(weight));
    if (g.as_json) {
        json j;
        j["spec"] = q.to_spec();
        j["n"] = n;
        j["weight"] = std::to_string(weight);
        j["walsh_max"] = wmax;
        j["nonlinearity"] = std::to_string(nl);
        j["plateaued"] = rswt::plateaued_to_json(pf);
        std::cout << j.dump(2) << '\n';
    } else {
        std::cout << "function " << q.to_spec() << " with n = " << n << '\n';
        std::cout << "weight        " << weight << '\n';
        std::cout << "max |Walsh|   " << wmax << '\n';
        std::cout << "nonlinearity  " << nl << '\n';
        if (pf.balanced)
            std::cout << "plateaued     balanced (weight 2^(n-1))\n";
        else
            std::cout << "plateaued     sign " << (pf.sign > 0 ? '+' : '-') << ", v = " << pf.v
                      << '\n';
    }
    return 0;
}

int cmd_sweep(rswt::SweepConfig cfg, const GlobalOpts& g) {
    cfg.brute_cap = g.brute_cap;
    if (g.as_json)
        cfg.format = rswt::SweepFormat::Json;
    else if (g.as_csv)
        cfg.format = rswt::SweepFormat::Csv;
    const std::vector<rswt::SweepRow> rows = rswt::run_sweep(cfg);
    switch (cfg.format) {
        case rswt::SweepFormat::Json: std::cout << rswt::sweep_json(rows); break;
        case rswt::SweepFormat::Csv: std::cout << rswt::sweep_csv(rows); break;
        case rswt::SweepFormat::Text: std::cout << rswt::sweep_text(rows); break;
    }
    bool ok = true;
    for (const auto& r : rows)
        if (r.error.empty() && !r.ecc_holds) ok = false;
    return ok ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact weight recursions for quadratic rotation-symmetric Boolean functions"};
    app.require_subcommand(1);

    GlobalOpts g;
    app.add_flag("--json", g.as_json, "machine-readable JSON output");
    app.add_flag("--csv", g.as_csv, "CSV output where supported");
    app.add_option("--brute-cap", g.brute_cap, "max n for 2^n truth-table enumeration");
    app.add_option("--precision", g.precision, "decimal digits for root-based computation");
    app.add_option("--workers", g.workers, "worker threads (0 = library default)");

    std::string spec;
    bool expanded = false;
    auto* matrix = app.add_subcommand("matrix", "index sets, rules matrix, Rules matrix");
    matrix->add_option("spec", spec, "function spec, e.g. \"(1,4)+(1,2)\"")->required();
    matrix->add_flag("--expanded", expanded, "also print the pre-reduction expanded matrix");

    auto* poly = app.add_subcommand("poly", "characteristic and minimal polynomials");
    poly->add_option("spec", spec)->required();

    long n_from = 1, n_to = 10, n_max = 24;
    std::string method = "recursion";
    auto* weights = app.add_subcommand("weights", "weight table over a range of n");
    weights->add_option("spec", spec)->required();
    weights->add_option("n_from", n_from)->required();
    weights->add_option("n_to", n_to)->required();
    weights->add_option("--method", method, "recursion | trace | roots | brute")
        ->check(CLI::IsMember({"recursion", "trace", "roots", "brute"}));

    auto* ecc = app.add_subcommand("ecc", "compare trace, recursion and brute-force weights");
    ecc->add_option("spec", spec)->required();
    ecc->add_option("n_max", n_max)->required();

    int n_terms = 10;
    auto* genfunc = app.add_subcommand("genfunc", "rational generating function of the weights");
    genfunc->add_option("spec", spec)->required();
    genfunc->add_option("N", n_terms, "series terms to print");

    int n_vars = 0;
    auto* spectrum = app.add_subcommand("spectrum",
                                        "weight, Walsh maximum, nonlinearity, plateaued form");
    spectrum->add_option("spec", spec)->required();
    spectrum->add_option("n", n_vars)->required();

    rswt::SweepConfig scfg;
    auto* sweep = app.add_subcommand("sweep", "batch verification over a family of functions");
    sweep->add_option("--t1-max", scfg.t1_max, "largest generator offset");
    sweep->add_option("--m-max", scfg.m_max, "largest generator count");
    sweep->add_option("--n-max", scfg.n_max, "verify weights for n = 1..n_max");

    // Let global flags appear after the subcommand too.
    for (CLI::App* s : {matrix, poly, weights, ecc, genfunc, spectrum, sweep}) s->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        app.exit(e);
        return 2;
    }

#ifdef _OPENMP
    if (g.workers > 0) omp_set_num_threads(g.workers);
#endif

    try {
        if (matrix->parsed()) return cmd_matrix(spec, expanded, g);
        if (poly->parsed()) return cmd_poly(spec, g);
        if (weights->parsed()) return cmd_weights(spec, n_from, n_to, method, g);
        if (ecc->parsed()) return cmd_ecc(spec, n_max, g);
        if (genfunc->parsed()) return cmd_genfunc(spec, n_terms, g);
        if (spectrum->parsed()) return cmd_spectrum(spec, n_vars, g);
        if (sweep->parsed()) return cmd_sweep(scfg, g);
    } catch (const rswt::ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const rswt::CapExceeded& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const CLI::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const rswt::VerificationError& e) {
        std::cerr << "verification failure: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 2;
}
