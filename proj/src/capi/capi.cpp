#include "kontact.h"

#include <fstream>
#include <future>
#include <sstream>

#include "liesys/liesys.hpp"
#include "report/report.hpp"
#include "symcore/errors.hpp"
#include "symcore/parser.hpp"

using namespace kontact;

struct kk_ctx {
    std::string error;
    std::uint64_t seed = 12345;
    bool timings = false;
};

struct kk_report {
    int status = KK_OK;
    std::string text;
    std::string json;
};

namespace {

kk_report* finish(const ReportDocument& doc) {
    auto* rep = new kk_report;
    rep->status = doc.exit_status() == 0 ? KK_OK : KK_FINDINGS;
    rep->text = doc.to_text();
    rep->json = doc.to_json();
    return rep;
}

template <typename Fn>
kk_status guarded(kk_ctx* ctx, kk_report** out, Fn&& fn) {
    if (!ctx || !out) return KK_ERR_USAGE;
    *out = nullptr;
    ctx->error.clear();
    try {
        *out = fn();
        return static_cast<kk_status>((*out)->status);
    } catch (const ParseError& e) {
        ctx->error = e.what();
        return KK_ERR_PARSE;
    } catch (const Error& e) {
        ctx->error = e.what();
        return KK_ERR_USAGE;
    } catch (const std::exception& e) {
        ctx->error = e.what();
        return KK_ERR_INTERNAL;
    }
}

std::vector<VectorField> parse_fields(const ChartPtr& chart, const char* const* exprs,
                                      std::size_t n) {
    if (!exprs || n == 0) throw DomainError("at least one field expression is required");
    std::vector<VectorField> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (!exprs[i]) throw DomainError("null expression");
        out.push_back(parse_field(exprs[i], chart));
    }
    return out;
}

std::vector<Point> parse_points(const ChartPtr& chart, const char* spec) {
    std::vector<Point> pts;
    std::istringstream in{std::string(spec)};
    std::string item;
    while (std::getline(in, item, ';'))
        if (!item.empty()) pts.push_back(Point::parse(chart, item));
    if (pts.empty()) throw DomainError("empty point list");
    return pts;
}

std::vector<Point> points_or_default(const ChartPtr& chart, const char* spec,
                                     std::uint64_t seed) {
    if (spec && *spec) return parse_points(chart, spec);
    return sample_points(chart, seed);
}

std::vector<double> parse_state(const char* spec, std::size_t dim) {
    if (!spec) throw DomainError("missing initial state");
    std::vector<double> x;
    std::istringstream in{std::string(spec)};
    std::string item;
    while (std::getline(in, item, ','))
        x.push_back(Rat::parse(item.find_first_not_of(" \t") == std::string::npos
                                   ? item
                                   : item.substr(item.find_first_not_of(" \t")))
                        .to_double());
    if (x.size() != dim)
        throw DomainError("state has " + std::to_string(x.size()) + " entries, chart needs " +
                          std::to_string(dim));
    return x;
}

std::string constants_data(const StructureConstants& sc) {
    std::string out = "[";
    bool first = true;
    for (const auto& [idx, c] : sc.entries()) {
        auto [i, j, k] = idx;
        if (!first) out += ",";
        first = false;
        out += "[" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) +
               ",\"" + c.str() + "\"]";
    }
    return out + "]";
}

std::string quoted(const std::string& s) { return "\"" + s + "\""; }

}  // namespace

extern "C" {

const char* kk_version(void) { return "kontact 1.0"; }

kk_ctx* kk_ctx_new(void) { return new kk_ctx; }

void kk_ctx_free(kk_ctx* ctx) { delete ctx; }

const char* kk_ctx_error(const kk_ctx* ctx) { return ctx ? ctx->error.c_str() : ""; }

void kk_ctx_set_seed(kk_ctx* ctx, unsigned long seed) {
    if (ctx) ctx->seed = seed;
}

void kk_ctx_set_timings(kk_ctx* ctx, int enabled) {
    if (ctx) ctx->timings = enabled != 0;
}

kk_status kk_bracket(kk_ctx* ctx, const char* chart_decl, const char* lhs, const char* rhs,
                     kk_report** out) {
    return guarded(ctx, out, [&] {
        if (!chart_decl || !lhs || !rhs) throw DomainError("bracket needs a chart and two fields");
        ChartPtr chart = make_chart(chart_decl);
        VectorField x = parse_field(lhs, chart);
        VectorField y = parse_field(rhs, chart);
        ReportDocument doc("bracket --chart " + quoted(chart_decl) + " " + quoted(lhs) + " " +
                           quoted(rhs));
        doc.add_info("bracket", lie_bracket(x, y).str());
        return finish(doc);
    });
}

kk_status kk_flag(kk_ctx* ctx, const char* chart_decl, const char* const* gens, size_t ngens,
                  int max_depth, kk_report** out) {
    return guarded(ctx, out, [&] {
        if (!chart_decl) throw DomainError("flag needs a chart");
        ChartPtr chart = make_chart(chart_decl);
        Distribution d(chart, parse_fields(chart, gens, ngens));
        int depth = max_depth > 0 ? max_depth : static_cast<int>(chart->dim());
        DerivedFlag flag = derived_flag(d, depth);
        ReportDocument doc("flag --chart " + quoted(chart_decl));
        std::string ranks;
        for (std::size_t l = 0; l < flag.levels.size(); ++l) {
            if (l) ranks += ",";
            ranks += std::to_string(flag.levels[l].rank);
        }
        doc.add_info("generic ranks", "(" + ranks + ")");
        doc.add_info("stabilized", flag.stabilized ? "yes" : "no");
        for (std::size_t l = 0; l < flag.levels.size(); ++l)
            doc.add_info("level " + std::to_string(l),
                         std::to_string(flag.levels[l].generators.size()) + " generators, rank " +
                             std::to_string(flag.levels[l].rank));
        return finish(doc);
    });
}

kk_status kk_goursat(kk_ctx* ctx, const char* chart_decl, const char* const* gens,
                     size_t ngens, const char* points, kk_report** out) {
    return guarded(ctx, out, [&] {
        if (!chart_decl) throw DomainError("goursat needs a chart");
        ChartPtr chart = make_chart(chart_decl);
        Distribution d(chart, parse_fields(chart, gens, ngens));
        std::vector<Point> pts = points_or_default(chart, points, ctx->seed);
        GoursatVerdict v = is_goursat(d, pts);
        ReportDocument doc("goursat --chart " + quoted(chart_decl));
        std::string ranks;
        for (std::size_t i = 0; i < v.ranks.size(); ++i)
            ranks += (i ? "," : "") + std::to_string(v.ranks[i]);
        doc.add({"goursat", v.pass ? "pass, ranks (" + ranks + ")"
                                   : "fail, ranks (" + ranks + "); " + v.detail,
                 "rank l+2 at every level", v.pass ? "pass" : "finding", ""});
        return finish(doc);
    });
}

kk_status kk_symmetry(kk_ctx* ctx, const char* chart_decl, const char* const* gens,
                      size_t ngens, const char* candidate, kk_report** out) {
    return guarded(ctx, out, [&] {
        if (!chart_decl || !candidate) throw DomainError("symmetry needs a chart and a candidate");
        ChartPtr chart = make_chart(chart_decl);
        Distribution d(chart, parse_fields(chart, gens, ngens));
        VectorField y = parse_field(candidate, chart);
        SymmetryVerdict v = is_lie_symmetry(y, d);
        ReportDocument doc("symmetry --chart " + quoted(chart_decl) + " " + quoted(candidate));
        doc.add({"lie symmetry", v.pass ? "pass" : v.offending,
                 "[Y, g_i] in the distribution for every generator",
                 v.pass ? "pass" : "finding", ""});
        if (d.generators.size() == 2) {
            SymmetryVerdict sch = schouten_symmetry_check(y, d);
            doc.add({"bivector route", sch.pass ? "pass" : sch.offending,
                     "[Y, X1^X2] proportional to X1^X2", sch.pass ? "pass" : "finding", ""});
            if (sch.pass != v.pass)
                doc.add({"symmetry oracle agreement", "routes disagree", "routes agree",
                         "fail", "internal consistency"});
        }
        return finish(doc);
    });
}

kk_status kk_kcontact(kk_ctx* ctx, const char* chart_decl, const char* const* gens,
                      size_t ngens, const char* const* syms, size_t nsyms, const char* points,
                      kk_report** out) {
    return guarded(ctx, out, [&] {
        if (!chart_decl) throw DomainError("kcontact needs a chart");
        ChartPtr chart = make_chart(chart_decl);
        Distribution d(chart, parse_fields(chart, gens, ngens));
        std::vector<VectorField> s = parse_fields(chart, syms, nsyms);
        std::vector<Point> pts = points_or_default(chart, points, ctx->seed);
        KContactReport rep = kcontact_verify(d, s, pts);
        ReportDocument doc("kcontact --chart " + quoted(chart_decl));
        for (std::size_t i = 0; i < rep.symmetry_checks.size(); ++i)
            doc.add({"symmetry S" + std::to_string(i + 1),
                     rep.symmetry_checks[i].pass ? "pass" : rep.symmetry_checks[i].offending,
                     "Lie symmetry of the distribution",
                     rep.symmetry_checks[i].pass ? "pass" : "finding", ""});
        for (const auto& pc : rep.commutation_checks)
            doc.add({"commutation [S" + std::to_string(pc.i + 1) + ",S" +
                         std::to_string(pc.j + 1) + "]",
                     pc.commute ? "0" : pc.bracket, "0", pc.commute ? "pass" : "finding", ""});
        doc.add_info("spanning", rep.spanning.description);
        int pass_pts = 0, fail_pts = 0, deficient = 0;
        for (const auto& p : rep.nonintegrability.points) {
            if (p.status == PointStatus::Pass) ++pass_pts;
            if (p.status == PointStatus::Fail) {
                ++fail_pts;
                doc.add({"non-integrability at " + p.point.str(), "degenerate pairing",
                         "non-degenerate", "finding", ""});
            }
            if (p.status == PointStatus::RankDeficient) {
                ++deficient;
                doc.add_info("rank-deficient sample point", p.point.str());
            }
        }
        doc.add_info("non-integrability",
                     std::to_string(pass_pts) + " of " +
                         std::to_string(rep.nonintegrability.points.size()) +
                         " sample points non-degenerate" +
                         (deficient ? " (" + std::to_string(deficient) + " rank-deficient)"
                                    : ""));
        doc.add({"k-contact", "overall=" + rep.overall + ", k=" + std::to_string(rep.k),
                 "pass", rep.overall != "fail" ? "pass" : "finding", ""});
        return finish(doc);
    });
}

kk_status kk_closure(kk_ctx* ctx, const char* chart_decl, const char* const* seeds,
                     size_t nseeds, int max_dim, kk_report** out) {
    return guarded(ctx, out, [&] {
        if (!chart_decl) throw DomainError("closure needs a chart");
        ChartPtr chart = make_chart(chart_decl);
        std::vector<VectorField> seed = parse_fields(chart, seeds, nseeds);
        int bound = max_dim > 0 ? max_dim : 16;
        ClosureResult res = bracket_closure(seed, bound);
        ReportDocument doc("closure --chart " + quoted(chart_decl) + " --max-dim " +
                           std::to_string(bound));
        if (res.status == ClosureResult::Status::Closed) {
            doc.add_info("closure", "closed, dimension " + std::to_string(res.basis.size()));
            for (std::size_t i = 0; i < res.basis.size(); ++i)
                doc.add_info("X" + std::to_string(i + 1), res.basis[i].str());
            CheckRecord rec{"structure constants", res.constants->str(), "", "info", ""};
            rec.data = constants_data(*res.constants);
            doc.add(std::move(rec));
        } else {
            doc.add({"closure", "not closed within dimension " + std::to_string(bound),
                     "finite-dimensional closure", "finding", ""});
        }
        return finish(doc);
    });
}

kk_status kk_constants(kk_ctx* ctx, const char* chart_decl, const char* const* basis,
                       size_t nbasis, kk_report** out) {
    return guarded(ctx, out, [&] {
        if (!chart_decl) throw DomainError("constants needs a chart");
        ChartPtr chart = make_chart(chart_decl);
        std::vector<VectorField> fields = parse_fields(chart, basis, nbasis);
        ReportDocument doc("constants --chart " + quoted(chart_decl));
        StructureConstants sc(static_cast<int>(fields.size()));
        bool vg = true;
        for (std::size_t j = 1; j < fields.size(); ++j) {
            for (std::size_t i = 0; i < j; ++i) {
                auto a = constant_decompose(lie_bracket(fields[i], fields[j]), fields);
                if (!a) {
                    vg = false;
                    doc.add({"bracket [X" + std::to_string(i + 1) + ",X" +
                                 std::to_string(j + 1) + "]",
                             "not a constant combination of the basis", "decomposable",
                             "finding", ""});
                    continue;
                }
                for (std::size_t k = 0; k < a->size(); ++k)
                    if (!(*a)[k].is_zero())
                        sc.set(static_cast<int>(i) + 1, static_cast<int>(j) + 1,
                               static_cast<int>(k) + 1, (*a)[k]);
            }
        }
        if (vg) {
            CheckRecord rec{"structure constants", sc.str(), "", "info", ""};
            rec.data = constants_data(sc);
            doc.add(std::move(rec));
            doc.add_info("jacobi", sc.jacobi_holds() ? "holds" : "violated");
        } else {
            doc.add({"basis", "not a VG basis", "all brackets decomposable", "finding", ""});
        }
        return finish(doc);
    });
}

kk_status kk_catalog_list(kk_ctx* ctx, kk_report** out) {
    return guarded(ctx, out, [&] {
        ReportDocument doc("catalog-list");
        for (const auto& name : list_entries()) doc.add_info(name, get_entry(name).title);
        return finish(doc);
    });
}

kk_status kk_catalog_verify(kk_ctx* ctx, const char* name, kk_report** out) {
    return guarded(ctx, out, [&] {
        VerifyOptions opts;
        opts.seed = ctx->seed;
        if (name && *name) {
            ReportDocument doc("catalog-verify " + std::string(name));
            doc.add_entry_report(verify_entry(name, opts), ctx->timings);
            return finish(doc);
        }
        // Entries verify independently; join in catalog order.
        ReportDocument doc("catalog-verify --all");
        std::vector<std::future<VerificationReport>> futures;
        for (const auto& entry : list_entries())
            futures.push_back(std::async(std::launch::async,
                                         [entry, opts] { return verify_entry(entry, opts); }));
        for (auto& f : futures) doc.add_entry_report(f.get(), ctx->timings);
        return finish(doc);
    });
}

kk_status kk_obstruction(kk_ctx* ctx, kk_report** out) {
    return guarded(ctx, out, [&] {
        ReportDocument doc("obstruction");
        doc.add_entry_report(class6_obstruction_check(), ctx->timings);
        return finish(doc);
    });
}

kk_status kk_trailer(kk_ctx* ctx, int n, kk_report** out) {
    return guarded(ctx, out, [&] {
        Distribution d = n_trailer(n);
        ReportDocument doc("trailer " + std::to_string(n));
        doc.add_info("chart", d.chart->decl_string());
        doc.add_info("X1", d.generators[0].str());
        doc.add_info("X2", d.generators[1].str());
        DerivedFlag flag = derived_flag(d, static_cast<int>(d.chart->dim()));
        std::string ranks;
        for (std::size_t l = 0; l < flag.levels.size(); ++l)
            ranks += (l ? "," : "") + std::to_string(flag.levels[l].rank);
        doc.add_info("derived flag ranks", "(" + ranks + ")");
        return finish(doc);
    });
}

kk_status kk_simulate(kk_ctx* ctx, const char* basis_entry, const char* chart_decl,
                      const char* const* basis, size_t nbasis, const char* b_coeffs,
                      const char* x0, double t0, double t1, double step,
                      const char* csv_path, kk_report** out) {
    return guarded(ctx, out, [&] {
        std::vector<VectorField> fields;
        std::string echo = "simulate";
        if (basis_entry && *basis_entry) {
            const CatalogEntry& entry = get_entry(basis_entry);
            fields = entry.vg_basis.empty() ? entry.generators : entry.vg_basis;
            echo += " --entry " + std::string(basis_entry);
        } else {
            if (!chart_decl) throw DomainError("simulate needs --entry or a chart with fields");
            ChartPtr chart = make_chart(chart_decl);
            fields = parse_fields(chart, basis, nbasis);
            echo += " --chart " + quoted(chart_decl);
        }
        if (!b_coeffs) throw DomainError("simulate needs t-dependent coefficients");
        TDepCoefficients b = TDepCoefficients::parse(b_coeffs);
        std::vector<double> state = parse_state(x0, fields[0].chart()->dim());
        Trajectory traj = integrate_rk4(fields, b, state, t0, t1, step);
        ReportDocument doc(echo + " --b " + quoted(b.str()));
        doc.add_info("samples", std::to_string(traj.times.size()));
        char buf[64];
        std::string fin;
        for (double v : traj.states.back()) {
            std::snprintf(buf, sizeof buf, "%.17g", v);
            fin += (fin.empty() ? "" : ", ") + std::string(buf);
        }
        std::snprintf(buf, sizeof buf, "%.17g", traj.times.back());
        doc.add_info("final t", buf);
        doc.add_info("final state", fin);
        if (csv_path && *csv_path) {
            std::ofstream f(csv_path);
            if (!f) throw DomainError("cannot open CSV path: " + std::string(csv_path));
            traj.write_csv(f);
            doc.add_info("csv", csv_path);
        }
        return finish(doc);
    });
}

kk_status kk_superpose(kk_ctx* ctx, const char* g_spec, const char* b_coeffs, const char* x0,
                       double t0, double t1, double step, double tol, kk_report** out) {
    return guarded(ctx, out, [&] {
        if (!g_spec) throw DomainError("superpose needs a group element");
        const CatalogEntry& entry = get_entry("zero_trailer");
        ISO2Element g = ISO2Element::parse(g_spec);
        TDepCoefficients b = TDepCoefficients::parse(b_coeffs ? b_coeffs : "1;t;0");
        std::vector<double> state = parse_state(x0 ? x0 : "0,0,0", 3);
        SuperposeReport rep =
            check_superposition(entry.vg_basis, b, g, state, t0, t1, step, tol);
        ReportDocument doc("superpose --g " + quoted(g_spec));
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.17g", rep.discrepancy);
        doc.add({"superposition",
                 "sup-norm discrepancy " + std::string(buf) + " over " +
                     std::to_string(rep.samples) + " samples",
                 "discrepancy <= tolerance", rep.pass ? "pass" : "finding",
                 "ISO(2) superposition rule"});
        return finish(doc);
    });
}

int kk_report_status(const kk_report* rep) { return rep ? rep->status : KK_ERR_USAGE; }

const char* kk_report_text(const kk_report* rep) { return rep ? rep->text.c_str() : ""; }

const char* kk_report_json(const kk_report* rep) { return rep ? rep->json.c_str() : ""; }

void kk_report_free(kk_report* rep) { delete rep; }

}  // extern "C"
