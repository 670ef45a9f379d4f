// kkit: command-line front end for the kontact shared library.
//
// Every subcommand parses its arguments, calls the corresponding kk_* C API
// function, prints the text report to stdout and optionally writes the JSON
// document to a file. Exit codes: 0 all checks pass, 1 findings present,
// 2 usage or input error.

#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "kontact.h"

namespace {

struct Common {
    std::string json_path;
    unsigned long seed = 12345;
    bool timings = false;
};

std::vector<const char*> c_strs(const std::vector<std::string>& v) {
    std::vector<const char*> out;
    out.reserve(v.size());
    for (const auto& s : v) out.push_back(s.c_str());
    return out;
}

bool parse_tspan(const std::string& spec, double& t0, double& t1) {
    auto colon = spec.find(':');
    if (colon == std::string::npos) return false;
    try {
        t0 = std::stod(spec.substr(0, colon));
        t1 = std::stod(spec.substr(colon + 1));
    } catch (...) {
        return false;
    }
    return t1 >= t0;
}

int emit(kk_ctx* ctx, kk_status st, kk_report* rep, const Common& common) {
    if (st == KK_ERR_USAGE || st == KK_ERR_PARSE || st == KK_ERR_INTERNAL) {
        std::cerr << "error: " << kk_ctx_error(ctx) << "\n";
        return 2;
    }
    std::cout << kk_report_text(rep);
    if (!common.json_path.empty()) {
        std::ofstream f(common.json_path);
        if (!f) {
            std::cerr << "error: cannot write " << common.json_path << "\n";
            kk_report_free(rep);
            return 2;
        }
        f << kk_report_json(rep);
    }
    int code = kk_report_status(rep) == KK_OK ? 0 : 1;
    kk_report_free(rep);
    return code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact verification of Goursat and k-contact distribution claims, "
                 "plus Lie-system simulation"};
    app.require_subcommand(1);

    Common common;
    app.add_option("--json", common.json_path, "write the JSON report to this path");
    app.add_option("--seed", common.seed, "seed for pseudo-random sample points");
    app.add_flag("--timings", common.timings, "include wall times in reports");

    // bracket
    std::string chart;
    std::vector<std::string> exprs, dist, syms;
    std::string points, candidate;
    int max_depth = 0, max_dim = 16, trailer_n = 0;

    auto* c_bracket = app.add_subcommand("bracket", "Lie bracket of two fields");
    c_bracket->add_option("--chart", chart, "chart declaration")->required();
    c_bracket->add_option("exprs", exprs, "two vector-field expressions")
        ->expected(2)
        ->required();

    auto* c_flag = app.add_subcommand("flag", "derived flag of a distribution");
    c_flag->add_option("--chart", chart)->required();
    c_flag->add_option("--max-depth", max_depth, "maximum flag depth");
    c_flag->add_option("exprs", exprs, "generator expressions")->required();

    auto* c_goursat = app.add_subcommand("goursat", "Goursat growth test");
    c_goursat->add_option("--chart", chart)->required();
    c_goursat->add_option("--points", points, "sample points 'p1;p2;...'");
    c_goursat->add_option("exprs", exprs, "two generator expressions")->expected(2)->required();

    auto* c_symmetry = app.add_subcommand("symmetry", "Lie symmetry test");
    c_symmetry->add_option("--chart", chart)->required();
    c_symmetry->add_option("--dist", dist, "distribution generators")->required();
    c_symmetry->add_option("candidate", candidate, "candidate field")->required();

    auto* c_kcontact = app.add_subcommand("kcontact", "k-contact candidate verification");
    c_kcontact->add_option("--chart", chart)->required();
    c_kcontact->add_option("--dist", dist, "distribution generators")->required();
    c_kcontact->add_option("--sym", syms, "candidate symmetries")->required();
    c_kcontact->add_option("--points", points);

    auto* c_closure = app.add_subcommand("closure", "Lie-algebra closure of seed fields");
    c_closure->add_option("--chart", chart)->required();
    c_closure->add_option("--max-dim", max_dim, "dimension bound");
    c_closure->add_option("exprs", exprs, "seed fields")->required();

    auto* c_constants = app.add_subcommand("constants", "structure constants of a basis");
    c_constants->add_option("--chart", chart)->required();
    c_constants->add_option("exprs", exprs, "basis fields")->required();

    std::string entry_name;
    bool all_entries = false;
    auto* c_catalog = app.add_subcommand("catalog-verify", "verify built-in catalog entries");
    c_catalog->add_option("entry", entry_name, "entry name (see catalog-list)");
    c_catalog->add_flag("--all", all_entries, "verify every entry");

    app.add_subcommand("catalog-list", "list built-in catalog entries");
    app.add_subcommand("obstruction", "class-6 rank obstruction table");

    auto* c_trailer = app.add_subcommand("trailer", "n-trailer distribution");
    c_trailer->add_option("n", trailer_n, "number of trailers")->required();

    std::string entry_opt, b_coeffs = "1;t;0", x0, tspan = "0:1", g_spec;
    double step = 1e-3, tol = 1e-6;
    auto* c_simulate = app.add_subcommand("simulate", "integrate a Lie system (RK4)");
    c_simulate->add_option("--entry", entry_opt, "catalog entry supplying the basis");
    c_simulate->add_option("--chart", chart);
    c_simulate->add_option("--basis", exprs, "explicit basis fields");
    c_simulate->add_option("--b", b_coeffs, "t-coefficients, ';'-separated")->required();
    c_simulate->add_option("--x0", x0, "initial state")->required();
    c_simulate->add_option("--tspan", tspan, "time span t0:t1");
    c_simulate->add_option("--step", step, "RK4 step size");
    std::string csv_path;
    c_simulate->add_option("--csv", csv_path, "trajectory CSV output path");

    auto* c_superpose = app.add_subcommand("superpose", "zero-trailer superposition check");
    c_superpose->add_option("--g", g_spec, "group element 's,c;l1,l2'")->required();
    c_superpose->add_option("--b", b_coeffs);
    c_superpose->add_option("--x0", x0);
    c_superpose->add_option("--tspan", tspan);
    c_superpose->add_option("--step", step);
    c_superpose->add_option("--tol", tol, "discrepancy tolerance");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    kk_ctx* ctx = kk_ctx_new();
    kk_ctx_set_seed(ctx, common.seed);
    kk_ctx_set_timings(ctx, common.timings ? 1 : 0);

    kk_report* rep = nullptr;
    kk_status st = KK_ERR_USAGE;

    if (c_bracket->parsed()) {
        st = kk_bracket(ctx, chart.c_str(), exprs[0].c_str(), exprs[1].c_str(), &rep);
    } else if (c_flag->parsed()) {
        auto gens = c_strs(exprs);
        st = kk_flag(ctx, chart.c_str(), gens.data(), gens.size(), max_depth, &rep);
    } else if (c_goursat->parsed()) {
        auto gens = c_strs(exprs);
        st = kk_goursat(ctx, chart.c_str(), gens.data(), gens.size(),
                        points.empty() ? nullptr : points.c_str(), &rep);
    } else if (c_symmetry->parsed()) {
        auto gens = c_strs(dist);
        st = kk_symmetry(ctx, chart.c_str(), gens.data(), gens.size(), candidate.c_str(), &rep);
    } else if (c_kcontact->parsed()) {
        auto gens = c_strs(dist);
        auto cand = c_strs(syms);
        st = kk_kcontact(ctx, chart.c_str(), gens.data(), gens.size(), cand.data(),
                         cand.size(), points.empty() ? nullptr : points.c_str(), &rep);
    } else if (c_closure->parsed()) {
        auto seeds = c_strs(exprs);
        st = kk_closure(ctx, chart.c_str(), seeds.data(), seeds.size(), max_dim, &rep);
    } else if (c_constants->parsed()) {
        auto basis = c_strs(exprs);
        st = kk_constants(ctx, chart.c_str(), basis.data(), basis.size(), &rep);
    } else if (c_catalog->parsed()) {
        if (!all_entries && entry_name.empty()) {
            std::cerr << "error: give an entry name or --all\n";
            kk_ctx_free(ctx);
            return 2;
        }
        st = kk_catalog_verify(ctx, all_entries ? nullptr : entry_name.c_str(), &rep);
    } else if (app.get_subcommand("catalog-list")->parsed()) {
        st = kk_catalog_list(ctx, &rep);
    } else if (app.get_subcommand("obstruction")->parsed()) {
        st = kk_obstruction(ctx, &rep);
    } else if (c_trailer->parsed()) {
        st = kk_trailer(ctx, trailer_n, &rep);
    } else if (c_simulate->parsed()) {
        double t0 = 0, t1 = 1;
        if (!parse_tspan(tspan, t0, t1)) {
            std::cerr << "error: bad --tspan, expected t0:t1\n";
            kk_ctx_free(ctx);
            return 2;
        }
        auto basis = c_strs(exprs);
        st = kk_simulate(ctx, entry_opt.empty() ? nullptr : entry_opt.c_str(),
                         chart.empty() ? nullptr : chart.c_str(),
                         basis.empty() ? nullptr : basis.data(), basis.size(),
                         b_coeffs.c_str(), x0.c_str(), t0, t1, step,
                         csv_path.empty() ? nullptr : csv_path.c_str(), &rep);
    } else if (c_superpose->parsed()) {
        double t0 = 0, t1 = 1;
        if (!parse_tspan(tspan, t0, t1)) {
            std::cerr << "error: bad --tspan, expected t0:t1\n";
            kk_ctx_free(ctx);
            return 2;
        }
        st = kk_superpose(ctx, g_spec.c_str(), b_coeffs.c_str(),
                          x0.empty() ? nullptr : x0.c_str(), t0, t1, step, tol, &rep);
    }

    int code = emit(ctx, st, rep, common);
    kk_ctx_free(ctx);
    return code;
}
