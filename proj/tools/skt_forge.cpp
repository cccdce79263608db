// skt-forge: exact-arithmetic analysis of invariant Hermitian structures on
// low-dimensional Lie algebras. Subcommands cover parsing, Jacobi checking,
// identification, cohomology, SKT family verification, generic condition
// lists, the four-dimensional summary table, numerical structure search, and
// bi-invariant torsion.
//
// Exit codes: 0 all verdicts pass, 1 a verification verdict fails,
// 2 usage or input errors.

#include "sktforge/biinvariant.hpp"
#include "sktforge/catalog.hpp"
#include "sktforge/cohomology.hpp"
#include "sktforge/families.hpp"
#include "sktforge/generic_case.hpp"
#include "sktforge/hermitian.hpp"
#include "sktforge/identify.hpp"
#include "sktforge/json_io.hpp"
#include "sktforge/membership.hpp"
#include "sktforge/notation.hpp"
#include "sktforge/search.hpp"
#include "sktforge/structure.hpp"
#include "sktforge/table4.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using sktforge::json;

std::string slurp(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::invalid_argument("cannot read file: " + path);
    std::stringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

std::string strip(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

// Inputs are compact notation "(...)"/"(...)xR..", inline JSON, or a path to
// a file holding either.
std::string resolve_input_text(const std::string& input) {
    std::string text = strip(input);
    if (!text.empty() && text[0] != '(' && text[0] != '{') text = strip(slurp(text));
    if (text.empty()) throw std::invalid_argument("empty input");
    return text;
}

sktforge::LieAlgebra load_algebra(const std::string& input) {
    std::string text = resolve_input_text(input);
    if (text[0] == '{') return sktforge::algebra_from_json(json::parse(text));
    return sktforge::parse_algebra_spec(text);
}

json load_json(const std::string& input) { return json::parse(resolve_input_text(input)); }

uint64_t resolve_seed(const std::optional<uint64_t>& cli_seed) {
    if (cli_seed) return *cli_seed;
    if (const char* env = std::getenv("SKT_FORGE_SEED")) {
        char* end = nullptr;
        uint64_t v = std::strtoull(env, &end, 10);
        if (end && *end == '\0') return v;
        throw std::invalid_argument("SKT_FORGE_SEED must be an unsigned integer");
    }
    return 1;
}

void print_json(const json& j) { std::cout << j.dump(2) << "\n"; }

json poly_list_json(const std::vector<sktforge::ScalarPoly>& polys) {
    json arr = json::array();
    for (auto& p : polys) arr.push_back(p.to_string());
    return arr;
}

int cmd_parse(const std::string& input, bool as_json) {
    sktforge::LieAlgebra alg = load_algebra(input);
    if (as_json) {
        print_json(sktforge::algebra_to_json(alg));
    } else {
        std::cout << "dim " << alg.dim;
        if (!alg.name.empty()) std::cout << "  name " << alg.name;
        std::cout << "\n" << sktforge::print_compact(alg) << "\n";
    }
    return 0;
}

int cmd_check(const std::string& input, bool as_json) {
    sktforge::LieAlgebra alg = load_algebra(input);
    auto forms = sktforge::jacobi_forms(alg);
    bool ok = true;
    json residuals = json::array();
    for (int k = 0; k < alg.dim; ++k) {
        if (!forms[k].coeffs.empty()) {
            ok = false;
            json r;
            r["covector"] = k + 1;
            r["dd"] = sktforge::form_to_json(forms[k]);
            residuals.push_back(std::move(r));
        }
    }
    if (as_json) {
        json out;
        out["jacobi"] = ok;
        out["violations"] = std::move(residuals);
        print_json(out);
    } else if (ok) {
        std::cout << "jacobi: pass (d o d = 0 on all covectors)\n";
    } else {
        std::cout << "jacobi: FAIL\n";
        for (int k = 0; k < alg.dim; ++k)
            if (!forms[k].coeffs.empty())
                std::cout << "  d(d e" << k + 1 << ")  is nonzero\n";
    }
    return ok ? 0 : 1;
}

json id_to_json(const sktforge::AlgebraId& id) {
    json out;
    out["id"] = id.family;
    auto names = sktforge::catalog_param_names(id.family);
    for (size_t k = 0; k < names.size() && k < id.params.size(); ++k)
        out[names[k]] = id.params[k].to_string();
    if (id.rn > 0 && id.family == "R^n") out["rn"] = id.rn;
    if (id.r_factors > 0) out["r_factors"] = id.r_factors;
    return out;
}

int cmd_classify(const std::string& input, bool as_json) {
    sktforge::LieAlgebraQ alg = sktforge::narrow(load_algebra(input));
    sktforge::IdResult r = sktforge::identify(alg);
    if (r.status == sktforge::IdStatus::identified) {
        if (as_json) {
            print_json(id_to_json(r.id));
        } else {
            std::cout << "identified: " << r.id.to_string() << "\n";
        }
        return 0;
    }
    const char* status =
        r.status == sktforge::IdStatus::ambiguous ? "ambiguous" : "unrecognized";
    if (as_json) {
        json out;
        out["status"] = status;
        out["message"] = r.message;
        print_json(out);
    } else {
        std::cout << status << ": " << r.message << "\n";
    }
    return 1;
}

int cmd_betti(const std::string& input, bool as_json) {
    sktforge::LieAlgebra alg = load_algebra(input);
    std::vector<int> b = sktforge::betti_checked(alg);
    bool uni = sktforge::is_unimodular(sktforge::narrow(alg));
    if (as_json) {
        print_json(sktforge::betti_to_json(b, uni));
    } else {
        std::cout << "betti:";
        for (int v : b) std::cout << " " << v;
        std::cout << "\nunimodular: " << (uni ? "yes" : "no") << "\n";
    }
    return 0;
}

json table4_report(bool& all_pass) {
    json rows = json::array();
    all_pass = true;
    for (const auto& row : sktforge::skt_algebra_rows()) {
        bool pass = true;
        std::vector<int> got;
        bool uni = false;
        for (const auto& id : row.instances()) {
            sktforge::LieAlgebraQ alg = sktforge::construct_from_id(id);
            got = sktforge::betti(alg);
            uni = sktforge::is_unimodular(alg);
            for (int k = 1; k <= 4; ++k)
                if (got[k] != row.betti[k - 1]) pass = false;
            if (uni != sktforge::in_unimodular_list(id)) pass = false;
            if (uni != (got[4] == 1)) pass = false;
        }
        json r;
        r["algebra"] = row.label;
        r["betti"] = std::vector<int>(got.begin() + 1, got.end());
        r["kahler"] = row.kahler;
        r["unimodular"] = uni;
        r["pass"] = pass;
        rows.push_back(std::move(r));
        all_pass = all_pass && pass;
    }
    json out;
    out["rows"] = std::move(rows);
    out["all_pass"] = all_pass;
    return out;
}

int cmd_table4(bool as_json) {
    bool all_pass = false;
    json out = table4_report(all_pass);
    if (as_json) {
        print_json(out);
    } else {
        std::cout << "algebra               b1 b2 b3 b4  kahler  unimodular  verdict\n";
        for (const auto& r : out["rows"]) {
            std::string label = r["algebra"].get<std::string>();
            label.resize(22, ' ');
            std::cout << label;
            for (const auto& b : r["betti"]) std::cout << " " << b.get<int>() << " ";
            std::cout << " " << (r["kahler"].get<bool>() ? "yes   " : "no    ") << "  "
                      << (r["unimodular"].get<bool>() ? "yes       " : "no        ")
                      << "  " << (r["pass"].get<bool>() ? "pass" : "FAIL") << "\n";
        }
        std::cout << (all_pass ? "all rows pass\n" : "FAILURES present\n");
    }
    return all_pass ? 0 : 1;
}

json family_report(const sktforge::FamilyDef& def, uint64_t seed, int points,
                   bool& pass) {
    auto sym = sktforge::verify_family_symbolic(def);
    sktforge::Splitmix64 rng(seed);
    int identified = 0, kahler_consistent = 0, skt_points = 0;
    for (int i = 0; i < points; ++i) {
        auto params = def.sample(rng);
        auto rep = sktforge::check_family_point(def, params);
        if (rep.skt) ++skt_points;
        if (rep.identified && rep.id_match) ++identified;
        if (rep.kahler == rep.kahler_expected) ++kahler_consistent;
    }
    pass = sym.ok() && skt_points == points && identified == points &&
           kahler_consistent == points;
    json r;
    r["family"] = def.id;
    r["jacobi"] = sym.jacobi_zero;
    r["integrable"] = sym.integrability_zero;
    r["skt"] = sym.skt_zero;
    r["identified_as"] = def.target_description;
    r["kahler_iff"] = def.kahler_description;
    r["points"] = points;
    r["points_skt"] = skt_points;
    r["points_identified"] = identified;
    r["points_kahler_consistent"] = kahler_consistent;
    r["pass"] = pass;
    return r;
}

int cmd_skt_verify(const std::string& family, bool all, const std::string& algebra,
                   const std::string& hermitian, std::optional<uint64_t> seed_opt,
                   int points, bool as_json) {
    if (!hermitian.empty()) {
        if (algebra.empty())
            throw std::invalid_argument("--hermitian needs --algebra");
        sktforge::LieAlgebraQ alg = sktforge::narrow(load_algebra(algebra));
        sktforge::HermitianQ h = sktforge::hermitian_from_json(load_json(hermitian), alg);
        bool integ = sktforge::is_integrable(h);
        auto sd = sktforge::is_skt(h);
        auto kd = sktforge::is_kahler(h);
        bool lee = sktforge::lee_coclosed(h);
        if (as_json) {
            json out;
            out["integrable"] = integ;
            out["skt"] = sd.skt;
            out["kahler"] = kd.kahler;
            out["lee_coclosed"] = lee;
            print_json(out);
        } else {
            std::cout << "integrable: " << integ << "\nskt: " << sd.skt
                      << "\nkahler: " << kd.kahler << "\nlee_coclosed: " << lee << "\n";
        }
        return sd.skt ? 0 : 1;
    }

    uint64_t seed = resolve_seed(seed_opt);
    std::vector<const sktforge::FamilyDef*> defs;
    if (all) {
        for (const auto& d : sktforge::skt_families()) defs.push_back(&d);
        std::sort(defs.begin(), defs.end(),
                  [](auto* a, auto* b) { return a->id < b->id; });
    } else if (!family.empty()) {
        defs.push_back(&sktforge::family_by_id(family));
    } else {
        throw std::invalid_argument("skt-verify needs --family, --all, or --hermitian");
    }

    bool all_pass = true;
    json rows = json::array();
    for (auto* def : defs) {
        bool pass = false;
        rows.push_back(family_report(*def, seed, points, pass));
        all_pass = all_pass && pass;
    }
    json out;
    out["seed"] = seed;
    out["families"] = std::move(rows);
    if (all) {
        bool table_pass = false;
        out["table4"] = table4_report(table_pass);
        all_pass = all_pass && table_pass;
    }
    out["all_pass"] = all_pass;
    if (as_json) {
        print_json(out);
    } else {
        std::cout << "seed " << seed << "\n";
        for (const auto& r : out["families"]) {
            std::string id = r["family"].get<std::string>();
            id.resize(20, ' ');
            std::cout << id << (r["pass"].get<bool>() ? " pass" : " FAIL")
                      << "  -> " << r["identified_as"].get<std::string>()
                      << "  (kahler iff " << r["kahler_iff"].get<std::string>() << ")\n";
        }
        std::cout << (all_pass ? "all checks pass\n" : "FAILURES present\n");
    }
    return all_pass ? 0 : 1;
}

json conditions_case_report(sktforge::StructCase tag, bool& pass) {
    const auto& cp = sktforge::generic_condition_polys(tag);
    std::vector<sktforge::ScalarPoly> computed = cp.integrability;
    for (auto& jpoly : cp.jacobi)
        if (!jpoly.is_zero()) computed.push_back(jpoly);
    computed.push_back(cp.skt);
    const auto& listed = sktforge::skt_condition_list(tag);
    auto cmp = sktforge::compare_condition_lists(computed, listed, 3);

    const auto& kcomputed = sktforge::kahler_residual_polys(tag);
    const auto& klisted = sktforge::kahler_condition_list(tag);
    auto kcmp = sktforge::compare_condition_lists(kcomputed, klisted, 3);

    pass = cmp.ok() && kcmp.ok();
    json out;
    out["conditions_skt"] = poly_list_json(listed);
    out["conditions_kahler"] = poly_list_json(klisted);
    out["residuals_skt"] = (int)computed.size();
    out["residuals_kahler"] = (int)kcomputed.size();
    out["equivalent_skt"] = cmp.ok();
    out["equivalent_kahler"] = kcmp.ok();
    json failing = json::array();
    for (size_t i : cmp.forward_failures) failing.push_back(computed[i].to_string());
    for (size_t i : cmp.backward_failures) failing.push_back(listed[i].to_string());
    for (size_t i : kcmp.forward_failures) failing.push_back(kcomputed[i].to_string());
    for (size_t i : kcmp.backward_failures) failing.push_back(klisted[i].to_string());
    out["failing_quantities"] = std::move(failing);
    return out;
}

int cmd_conditions(const std::string& which, bool as_json) {
    bool pass = true;
    json out;
    if (which == "complex" || which == "both") {
        bool p = false;
        out["complex"] = conditions_case_report(sktforge::StructCase::complex_case, p);
        pass = pass && p;
    }
    if (which == "real" || which == "both") {
        bool p = false;
        out["real"] = conditions_case_report(sktforge::StructCase::real_case, p);
        pass = pass && p;
    }
    if (out.empty())
        throw std::invalid_argument("--case must be complex, real, or both");
    out["all_pass"] = pass;
    if (as_json) {
        print_json(out);
    } else {
        for (auto& [key, c] : out.items()) {
            if (key == "all_pass") continue;
            std::cout << key << " case: skt conditions "
                      << c["conditions_skt"].size() << ", kahler conditions "
                      << c["conditions_kahler"].size() << ", equivalence "
                      << (c["equivalent_skt"].get<bool>() &&
                                  c["equivalent_kahler"].get<bool>()
                              ? "pass"
                              : "FAIL")
                      << "\n";
        }
        std::cout << (pass ? "condition lists match computed residuals\n"
                           : "MISMATCH in condition lists\n");
    }
    return pass ? 0 : 1;
}

json mat_json(const sktforge::Mat4& m) {
    json rows = json::array();
    for (auto& r : m) {
        json row = json::array();
        for (double v : r) row.push_back(v);
        rows.push_back(std::move(row));
    }
    return rows;
}

int cmd_search(const std::string& input, std::optional<uint64_t> seed_opt, int restarts,
               int max_iters, double threshold, double floor, bool as_json) {
    sktforge::LieAlgebraQ alg = sktforge::narrow(load_algebra(input));
    sktforge::SearchConfig cfg;
    cfg.seed = resolve_seed(seed_opt);
    cfg.restarts = restarts;
    cfg.max_iters = max_iters;
    cfg.found_tol = threshold;
    cfg.floor_tol = floor;
    sktforge::SearchResult r = sktforge::search_skt(alg, cfg);

    const char* verdict = r.found ? "found" : (r.decisive ? "not-found" : "inconclusive");
    if (as_json) {
        json out;
        out["seed"] = cfg.seed;
        out["restarts"] = r.restarts_used;
        out["verdict"] = verdict;
        out["best_residual"] = r.best_residual;
        out["found_restart"] = r.found_restart;
        out["restart_residuals"] = r.restart_residuals;
        if (r.found) {
            json w;
            w["A"] = mat_json(r.witness_A);
            w["J"] = mat_json(r.witness_J);
            w["g"] = mat_json(r.witness_g);
            w["j_defect"] = r.witness_j_defect;
            w["compat_defect"] = r.witness_compat_defect;
            w["positive_definite"] = r.witness_positive;
            out["witness"] = std::move(w);
        } else {
            out["note"] = "numerical evidence; not a proof of non-existence";
        }
        print_json(out);
    } else {
        std::cout << "seed " << cfg.seed << ", restarts " << r.restarts_used
                  << "\nverdict: " << verdict << "  (best residual "
                  << r.best_residual << ")\n";
        if (!r.found)
            std::cout << "note: numerical evidence; not a proof of non-existence\n";
    }
    return r.found ? 0 : 1;
}

sktforge::MetricQ parse_metric(const std::string& spec, int dim) {
    if (spec.empty() || spec == "identity")
        return sktforge::identity_metric<sktforge::Rational>(dim);
    if (spec.rfind("diag:", 0) == 0) {
        sktforge::MetricQ m = sktforge::identity_metric<sktforge::Rational>(dim);
        std::stringstream ss(spec.substr(5));
        std::string item;
        int k = 0;
        while (std::getline(ss, item, ',')) {
            if (k >= dim) throw std::invalid_argument("too many diagonal entries");
            m.g[k][k] = sktforge::Rational::from_string(strip(item));
            ++k;
        }
        if (k != dim) throw std::invalid_argument("need one diagonal entry per dimension");
        return m;
    }
    throw std::invalid_argument("metric spec must be \"identity\" or \"diag:a,b,...\"");
}

int cmd_compact_torsion(const std::string& input, const std::string& metric_spec,
                        bool as_json) {
    sktforge::LieAlgebraQ alg = sktforge::narrow(load_algebra(input));
    sktforge::MetricQ m = parse_metric(metric_spec, alg.dim);
    if (!sktforge::is_ad_invariant(alg, m))
        throw std::invalid_argument("metric is not ad-invariant for this algebra");
    auto rep = sktforge::biinvariant_report(alg, m);
    if (as_json) {
        json out;
        out["ad_invariant"] = true;
        out["torsion"] = sktforge::form_to_json(rep.torsion);
        out["closed"] = rep.closed;
        out["nonzero"] = rep.nonzero;
        print_json(out);
    } else {
        std::cout << "ad-invariant: yes\nclosed: " << (rep.closed ? "yes" : "no")
                  << "\nnonzero: " << (rep.nonzero ? "yes" : "no") << "\n";
    }
    return rep.closed ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact verification of invariant SKT geometry on low-dimensional "
                 "Lie algebras"};
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "emit canonical JSON instead of text");
    std::optional<uint64_t> seed;
    app.add_option("--seed", seed, "seed for randomized commands (fallback: "
                                   "SKT_FORGE_SEED, then 1)");

    auto* parse_cmd = app.add_subcommand("parse", "parse an algebra and reprint it");
    std::string parse_input;
    parse_cmd->add_option("input", parse_input, "compact notation, JSON, or file")
        ->required();

    auto* check_cmd = app.add_subcommand("check", "verify d o d = 0");
    std::string check_input;
    check_cmd->add_option("input", check_input, "compact notation, JSON, or file")
        ->required();

    auto* classify_cmd =
        app.add_subcommand("classify", "identify the isomorphism class");
    std::string classify_input;
    classify_cmd->add_option("input", classify_input, "compact notation, JSON, or file")
        ->required();

    auto* betti_cmd = app.add_subcommand("betti", "Betti numbers and unimodularity");
    std::string betti_input;
    betti_cmd->add_option("input", betti_input, "compact notation, JSON, or file")
        ->required();

    auto* verify_cmd =
        app.add_subcommand("skt-verify", "verify SKT solution families");
    std::string verify_family, verify_algebra, verify_hermitian;
    bool verify_all = false;
    int verify_points = 20;
    verify_cmd->add_option("--family", verify_family, "single family id");
    verify_cmd->add_flag("--all", verify_all, "all families plus summary table");
    verify_cmd->add_option("--algebra", verify_algebra,
                           "algebra input for an explicit structure");
    verify_cmd->add_option("--hermitian", verify_hermitian,
                           "JSON {\"J\":...,\"g\":...} or file");
    verify_cmd->add_option("--points", verify_points, "sample points per family")
        ->check(CLI::PositiveNumber);

    auto* cond_cmd =
        app.add_subcommand("conditions", "generic-case condition polynomials");
    std::string cond_case = "both";
    cond_cmd->add_option("--case", cond_case, "complex, real, or both");

    auto* table_cmd = app.add_subcommand("table4", "four-dimensional SKT summary table");

    auto* search_cmd =
        app.add_subcommand("search", "numerical search for an SKT structure");
    std::string search_input;
    int search_restarts = 100, search_iters = 150;
    double search_threshold = 1e-12, search_floor = 1e-10;
    search_cmd->add_option("input", search_input, "compact notation, JSON, or file")
        ->required();
    search_cmd->add_option("--restarts", search_restarts, "random restarts")
        ->check(CLI::PositiveNumber);
    search_cmd->add_option("--max-iters", search_iters, "iterations per restart")
        ->check(CLI::PositiveNumber);
    search_cmd->add_option("--threshold", search_threshold,
                           "sup-norm residual declaring found");
    search_cmd->add_option("--floor", search_floor,
                           "best residual above this declares not-found");

    auto* torsion_cmd = app.add_subcommand(
        "compact-torsion", "bi-invariant torsion three-form and closedness");
    std::string torsion_input, torsion_metric = "identity";
    torsion_cmd->add_option("input", torsion_input, "compact notation, JSON, or file")
        ->required();
    torsion_cmd->add_option("--metric", torsion_metric,
                            "\"identity\" or \"diag:a,b,...\"");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }

    try {
        if (parse_cmd->parsed()) return cmd_parse(parse_input, as_json);
        if (check_cmd->parsed()) return cmd_check(check_input, as_json);
        if (classify_cmd->parsed()) return cmd_classify(classify_input, as_json);
        if (betti_cmd->parsed()) return cmd_betti(betti_input, as_json);
        if (verify_cmd->parsed())
            return cmd_skt_verify(verify_family, verify_all, verify_algebra,
                                  verify_hermitian, seed, verify_points, as_json);
        if (cond_cmd->parsed()) return cmd_conditions(cond_case, as_json);
        if (table_cmd->parsed()) return cmd_table4(as_json);
        if (search_cmd->parsed())
            return cmd_search(search_input, seed, search_restarts, search_iters,
                              search_threshold, search_floor, as_json);
        if (torsion_cmd->parsed())
            return cmd_compact_torsion(torsion_input, torsion_metric, as_json);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    std::cerr << "no command\n";
    return 2;
}
