/*
 * rht_cli.cpp
 * -----------
 * Batch front door: parses presentation, simplicial-set, and jet files,
 * dispatches to the library modules, and emits one JSON report per run
 * with the fields `command`, `inputs`, `results`, `flags`.
 *
 * Exit codes: 0 success, 2 input error, 3 unsupported input.
 */
#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "rht/hochschild.hpp"
#include "rht/io.hpp"
#include "rht/sullivan.hpp"
#include "rht/whitney.hpp"

using json = nlohmann::json;
using namespace rht;

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open input file '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

std::string file_stem(const std::string& path) {
    auto slash = path.find_last_of('/');
    std::string base =
        slash == std::string::npos ? path : path.substr(slash + 1);
    auto dot = base.find_last_of('.');
    return dot == std::string::npos ? base : base.substr(0, dot);
}

std::shared_ptr<const cdga::CdgaPresentation> load_presentation(
    const std::string& path) {
    return io::parse_presentation(read_file(path), file_stem(path));
}

void emit(const json& report) { std::cout << report.dump(2) << "\n"; }

json counts_to_json(const std::map<int, std::size_t>& counts) {
    json out = json::object();
    for (const auto& [k, v] : counts) out[std::to_string(k)] = v;
    return out;
}

std::string polynomial_to_string(const whitney::Polynomial& f) {
    if (f.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : f.terms) {
        Rational q = c;
        if (first) {
            if (q < 0) {
                os << "-";
                q = -q;
            }
        } else {
            os << (q < 0 ? " - " : " + ");
            if (q < 0) q = -q;
        }
        first = false;
        bool has_var = e.order() > 0;
        if (!has_var || q != 1) os << rat_to_string(q);
        bool star = !has_var ? false : q != 1;
        for (int i = 0; i < f.n; ++i) {
            if (e.a[i] == 0) continue;
            if (star) os << "*";
            star = true;
            os << "x" << (i + 1);
            if (e.a[i] > 1) os << "^" << e.a[i];
        }
    }
    return os.str();
}

whitney::Quadrant parse_quadrant(const std::string& text) {
    // "zero:1,2;pos:3;neg:4" — any part may be omitted.
    whitney::Quadrant q;
    std::istringstream in(text);
    std::string part;
    while (std::getline(in, part, ';')) {
        if (part.empty()) continue;
        auto colon = part.find(':');
        std::string key = part.substr(0, colon);
        std::vector<int>* dst = nullptr;
        if (key == "zero")
            dst = &q.zero;
        else if (key == "pos")
            dst = &q.pos;
        else if (key == "neg")
            dst = &q.neg;
        else
            throw std::runtime_error("bad quadrant part '" + key +
                                     "' (expected zero/pos/neg)");
        if (colon == std::string::npos) continue;
        std::istringstream nums(part.substr(colon + 1));
        std::string tok;
        while (std::getline(nums, tok, ','))
            if (!tok.empty()) dst->push_back(std::stoi(tok));
    }
    return q;
}

int run(int argc, char** argv) {
    CLI::App app{
        "Exact-arithmetic toolkit for rational homotopy theory and "
        "Whitney-jet algebra"};
    app.require_subcommand(1);

    std::string file;
    int up_to = 6;
    int max_degree = 6;
    int max_length = 3;
    int poly_degree = 4;
    int n = 2;
    int samples = 50;
    unsigned seed = 1;
    int order = 0;
    std::vector<std::string> quadrant_specs;

    auto* c_cohomology = app.add_subcommand(
        "cohomology", "Cohomology dimensions and representatives");
    c_cohomology->add_option("file", file)->required();
    c_cohomology->add_option("--up-to", up_to);

    auto* c_minimal =
        app.add_subcommand("minimal-model", "Minimal Sullivan model");
    c_minimal->add_option("file", file)->required();
    c_minimal->add_option("--up-to", up_to);

    auto* c_ranks = app.add_subcommand(
        "homotopy-ranks", "Real homotopy group ranks from the minimal model");
    c_ranks->add_option("file", file)->required();
    c_ranks->add_option("--up-to", up_to);

    auto* c_formality =
        app.add_subcommand("formality", "Formality evidence up to a degree");
    c_formality->add_option("file", file)->required();
    c_formality->add_option("--up-to", up_to);

    auto* c_hochschild = app.add_subcommand(
        "hochschild", "Truncated Hochschild homology with stability flags");
    c_hochschild->add_option("file", file)->required();
    c_hochschild->add_option("--max-degree", max_degree);
    c_hochschild->add_option("--max-length", max_length);

    auto* c_loop = app.add_subcommand(
        "loop-space", "Free-loop-space cohomology ranks via the minimal model");
    c_loop->add_option("file", file)->required();
    c_loop->add_option("--max-degree", max_degree);
    c_loop->add_option("--max-length", max_length);

    auto* c_verify = app.add_subcommand(
        "apl-verify", "Exhaustive simplicial identity verification");
    c_verify->add_option("--n", n);

    auto* c_sections = app.add_subcommand(
        "apl-sections", "Cohomology of A_PL sections over a simplicial set");
    c_sections->add_option("file", file)->required();
    c_sections->add_option("--up-to", up_to);
    c_sections->add_option("--poly-degree", poly_degree);

    auto* c_stokes = app.add_subcommand(
        "stokes", "Randomized exact Stokes checks on the n-simplex");
    c_stokes->add_option("--n", n);
    c_stokes->add_option("--samples", samples);
    c_stokes->add_option("--degree", poly_degree);
    c_stokes->add_option("--seed", seed);

    auto* c_jets =
        app.add_subcommand("jets", "Jet table diagnostics and seminorms");
    c_jets->add_option("file", file)->required();
    c_jets->add_option("--order", order);

    auto* c_quadrant = app.add_subcommand(
        "quadrant-poincare",
        "Whitney-de Rham cohomology of a quadrant union via the radial "
        "homotopy");
    c_quadrant->add_option("--n", n);
    c_quadrant->add_option("--up-to", up_to);
    c_quadrant
        ->add_option("--quadrant", quadrant_specs,
                     "e.g. zero:1;pos:2 — repeatable for unions")
        ->required();

    app.parse(argc, argv);

    json report;
    report["flags"] = json::object();

    if (c_cohomology->parsed()) {
        auto p = load_presentation(file);
        auto h = cdga::cohomology(*p, up_to);
        report["command"] = "cohomology";
        report["inputs"] = {{"file", file}, {"up_to", up_to}};
        json degrees = json::array();
        for (int k = 0; k <= up_to; ++k) {
            json reps = json::array();
            for (const auto& r : h.at(k).representatives)
                reps.push_back(io::element_to_string(*p, r));
            degrees.push_back({{"degree", k},
                               {"dimension", h.at(k).dimension},
                               {"representatives", reps}});
        }
        report["results"] = {{"degrees", degrees}};
    } else if (c_minimal->parsed() || c_ranks->parsed()) {
        auto p = load_presentation(file);
        auto result = sullivan::minimal_model(p, up_to);
        bool ranks = c_ranks->parsed();
        report["command"] = ranks ? "homotopy-ranks" : "minimal-model";
        report["inputs"] = {{"file", file}, {"up_to", up_to}};
        json results;
        results[ranks ? "homotopy_ranks" : "generator_counts"] =
            counts_to_json(result.generator_counts());
        if (!ranks) {
            const auto& model = *result.model.underlying;
            json gens = json::array();
            for (std::size_t i = 0; i < model.generators.size(); ++i)
                gens.push_back(
                    {{"name", model.generators[i].name},
                     {"degree", model.generators[i].degree},
                     {"d", io::element_to_string(
                               model, model.d_on_generators[i])}});
            results["generators"] = gens;
        }
        report["results"] = results;
        report["flags"]["verified_quasi_iso_up_to"] = result.verified_degree;
    } else if (c_formality->parsed()) {
        auto p = load_presentation(file);
        auto f = sullivan::formal_up_to(p, up_to);
        report["command"] = "formality";
        report["inputs"] = {{"file", file}, {"up_to", up_to}};
        report["results"] = {
            {"formal_up_to_degree", f.agrees},
            {"model_generator_counts", counts_to_json(f.model_counts)},
            {"cohomology_model_generator_counts",
             counts_to_json(f.cohomology_model_counts)}};
    } else if (c_hochschild->parsed() || c_loop->parsed()) {
        auto p = load_presentation(file);
        hochschild::HochschildTable table;
        bool loop = c_loop->parsed();
        if (loop) {
            auto model =
                sullivan::minimal_model(p, max_degree + max_length);
            auto t = hochschild::loop_space_table(model, max_degree,
                                                  max_length);
            table = t.table;
            report["flags"]["interpretation"] = t.label;
        } else {
            table = hochschild::hochschild_homology(p, max_degree, max_length);
        }
        report["command"] = loop ? "loop-space" : "hochschild";
        report["inputs"] = {{"file", file},
                            {"max_degree", max_degree},
                            {"max_length", max_length}};
        json rows = json::array();
        for (const auto& r : table.rows)
            rows.push_back({{"degree", r.degree},
                            {"dimension", r.dimension},
                            {"stability",
                             r.stable ? "stable" : "truncation-limited"}});
        report["results"] = {{"rows", rows}};
        report["flags"]["regrading"] = table.convention;
    } else if (c_verify->parsed()) {
        auto r = apl::verify_simplicial_identities(n);
        report["command"] = "apl-verify";
        report["inputs"] = {{"n", n}};
        std::map<std::string, std::size_t> per_family;
        for (const auto& c : r.checks) per_family[c.family] += 1;
        json families = json::object();
        for (const auto& [fam, count] : per_family) families[fam] = count;
        report["results"] = {{"identities_checked", r.checks.size()},
                             {"per_family", families},
                             {"all_passed", r.all_passed}};
    } else if (c_sections->parsed()) {
        auto X = io::parse_simplicial_set(read_file(file));
        auto dims = apl::sections_cohomology(X, up_to, poly_degree);
        report["command"] = "apl-sections";
        report["inputs"] = {{"file", file},
                            {"up_to", up_to},
                            {"poly_degree", poly_degree}};
        json degrees = json::array();
        for (int k = 0; k <= up_to; ++k)
            degrees.push_back({{"degree", k}, {"dimension", dims[k]}});
        report["results"] = {{"degrees", degrees}};
    } else if (c_stokes->parsed()) {
        std::mt19937_64 rng(seed);
        std::uniform_int_distribution<long> num(-4, 4);
        std::uniform_int_distribution<long> den(1, 3);
        std::size_t passed = 0;
        for (int trial = 0; trial < samples; ++trial) {
            apl::PolyForm w = apl::PolyForm::zero(n);
            for (const auto& m :
                 apl::form_basis(n, n - 1, poly_degree))
                cdga::add_term(w.value, m, Rational(num(rng), den(rng)));
            if (apl::stokes_check(w).equal) ++passed;
        }
        report["command"] = "stokes";
        report["inputs"] = {{"n", n},
                            {"samples", samples},
                            {"degree", poly_degree},
                            {"seed", seed}};
        report["results"] = {{"passed", passed},
                             {"failed", samples - passed}};
    } else if (c_jets->parsed()) {
        auto F = io::parse_jet_table(read_file(file));
        if (order > F.m)
            throw std::runtime_error("--order exceeds the jet order");
        report["command"] = "jets";
        report["inputs"] = {{"file", file}, {"order", order}};
        json points = json::array();
        for (const auto& x : F.X.points) {
            json coords = json::array();
            for (const auto& c : x) coords.push_back(rat_to_string(c));
            points.push_back(coords);
        }
        json taylors = json::array();
        for (const auto& x : F.X.points)
            taylors.push_back(polynomial_to_string(
                whitney::taylor_poly(F, x, order)));
        report["results"] = {
            {"n", F.n},
            {"m", F.m},
            {"points", points},
            {"taylor_polynomials_at_order", order},
            {"taylor_polynomials", taylors},
            {"seminorm_flat", rat_to_string(whitney::seminorm_flat(
                                  F, F.X, F.m))},
            {"seminorm_whitney", rat_to_string(whitney::seminorm_whitney(
                                     F, F.X, F.m))}};
        report["flags"]["taylor_convention"] =
            "classical (y-x)^alpha; remainder of degree<=k polynomials "
            "vanishes";
    } else if (c_quadrant->parsed()) {
        whitney::QuadrantSpec spec;
        spec.n = n;
        for (const auto& text : quadrant_specs)
            spec.quadrants.push_back(parse_quadrant(text));
        auto r = whitney::quadrant_poincare_report(spec, up_to);
        report["command"] = "quadrant-poincare";
        report["inputs"] = {{"n", n},
                            {"up_to", up_to},
                            {"quadrants", quadrant_specs}};
        json degrees = json::array();
        for (int k = 0; k <= up_to; ++k)
            degrees.push_back({{"degree", k}, {"dimension", r.dims[k]}});
        report["results"] = {{"effective_dimension", r.effective_dim},
                             {"degrees", degrees},
                             {"forms_checked", r.forms_checked}};
        report["flags"]["method"] =
            "radial contraction homotopy verified on spanning forms";
    }

    emit(report);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const CLI::ParseError& e) {
        CLI::App app;
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const std::domain_error& e) {
        std::cerr << "unsupported input: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
