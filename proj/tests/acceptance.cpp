// Acceptance suite: runs every criterion at its stated tolerance and prints
// one PASS/FAIL line each. Exit code is the number of failed criteria.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "catalog/verify.hpp"
#include "liesys/liesys.hpp"
#include "symcore/parser.hpp"

using namespace kontact;

namespace {

int g_failures = 0;

struct Criterion {
    std::string label;
    double limit_seconds;
    bool ok = true;
    std::string detail;
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

    Criterion(std::string l, double limit) : label(std::move(l)), limit_seconds(limit) {}

    void require(bool cond, const std::string& what) {
        if (!cond && ok) {
            ok = false;
            detail = what;
        }
    }

    void finish() {
        double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (ok && secs > limit_seconds) {
            ok = false;
            detail = "exceeded the time budget of " + std::to_string(limit_seconds) + " s";
        }
        if (!ok) ++g_failures;
        std::printf("%s %s (%.2f s)%s%s\n", ok ? "PASS" : "FAIL", label.c_str(), secs,
                    ok ? "" : " -- ", ok ? "" : detail.c_str());
        std::fflush(stdout);
    }
};

const CheckRecord* find_check(const VerificationReport& rep, const std::string& needle) {
    for (const auto& c : rep.checks)
        if (c.name.find(needle) != std::string::npos) return &c;
    return nullptr;
}

void criterion1() {
    Criterion c("criterion 1: class-1 structure constants from closure", 1.0);
    const CatalogEntry& e = get_entry("class1");
    ClosureResult res = bracket_closure(e.generators, 4);
    c.require(res.status == ClosureResult::Status::Closed, "closure did not close");
    if (res.constants) {
        c.require(res.constants->get(1, 2, 3) == Rat(1), "c123 != 1");
        c.require(res.constants->get(2, 3, 4) == Rat(-1), "c234 != -1");
        for (int i = 1; i <= 4; ++i)
            for (int j = i + 1; j <= 4; ++j)
                for (int k = 1; k <= 4; ++k) {
                    if (i == 1 && j == 2 && k == 3) continue;
                    if (i == 2 && j == 3 && k == 4) continue;
                    c.require(res.constants->get(i, j, k).is_zero(),
                              "unexpected nonzero constant");
                }
    } else {
        c.require(false, "no constants produced");
    }
    c.finish();
}

void criterion2() {
    Criterion c("criterion 2: class-1 two-contact", 1.0);
    const CatalogEntry& e = get_entry("class1");
    const auto& r = e.candidates[0].fields;
    for (const auto& y : r)
        for (const auto& x : e.generators)
            c.require(lie_bracket(y, x).is_zero(), "[R_i, X_j] != 0");
    c.require(lie_bracket(r[0], r[1]).is_zero(), "[R1, R2] != 0");
    std::vector<VectorField> all = r;
    all.insert(all.end(), e.generators.begin(), e.generators.end());
    Locus l = spanning_locus(all);
    c.require(l.empty_degenerate(), "spanning determinant is not a nonzero constant");
    Distribution d(e.chart, e.generators);
    KContactReport kc =
        kcontact_verify(d, e.candidates[0].fields, sample_points(e.chart, 12345));
    c.require(kc.overall == "pass", "kcontact overall = " + kc.overall);
    c.finish();
}

void criterion3() {
    Criterion c("criterion 3: classes 2, 4, 5 commutations and class-5 locus", 5.0);
    for (const char* name : {"class2", "class4", "class5"}) {
        const CatalogEntry& e = get_entry(name);
        const auto& r = e.candidates[0].fields;
        for (const auto& y : r)
            for (const auto& x : e.generators)
                c.require(lie_bracket(y, x).is_zero(),
                          std::string(name) + ": [R_i, X_j] != 0");
        for (std::size_t i = 0; i < r.size(); ++i)
            for (std::size_t j = i + 1; j < r.size(); ++j)
                c.require(lie_bracket(r[i], r[j]).is_zero(),
                          std::string(name) + ": [R_i, R_j] != 0");
    }
    const CatalogEntry& c5 = get_entry("class5");
    std::vector<VectorField> all = c5.candidates[0].fields;
    all.insert(all.end(), c5.generators.begin(), c5.generators.end());
    Locus l = spanning_locus(all);
    c.require(l.minors.size() == 1, "class-5 locus needs one determinant minor");
    if (l.minors.size() == 1) {
        TrigPoly x6 = TrigPoly::coordinate(c5.chart, 5);
        c.require(l.minors[0] == x6 || l.minors[0] == -x6,
                  "class-5 determinant is not a unit multiple of x6");
    }
    c.require(l.description.find("x6") != std::string::npos,
              "class-5 locus {x6=0} not reported");
    c.finish();
}

void criterion4() {
    Criterion c("criterion 4: class-6 rank obstruction", 5.0);
    const CatalogEntry& e = get_entry("class6");
    auto ad = ad_distribution(e.generators[0], e.generators[1], 4);
    c.require(generic_rank(ad) == 6, "generic rank != 6");
    int drop_points = 0;
    for (const auto& p : e.special_points)
        if (p.linear_value(4).is_zero() && rank_at(ad, p) == 5) ++drop_points;
    c.require(drop_points >= 3, "fewer than three x5=0 points with rank 5");
    c.finish();
}

void criterion5() {
    Criterion c("criterion 5: Goursat growth for classes 1-8", 30.0);
    for (int i = 1; i <= 8; ++i) {
        std::string name = "class" + std::to_string(i);
        const CatalogEntry& e = get_entry(name);
        Distribution d(e.chart, e.generators);
        GoursatVerdict v = is_goursat(d, sample_points(e.chart, 12345, e.special_points));
        std::vector<int> expected;
        for (std::size_t l = 0; l + 2 <= e.chart->dim(); ++l)
            expected.push_back(static_cast<int>(l) + 2);
        c.require(v.pass && v.ranks == expected, name + ": " + v.detail);
    }
    c.finish();
}

void criterion6() {
    Criterion c("criterion 6: zero-trailer exact suite", 2.0);
    const CatalogEntry& e = get_entry("zero_trailer");
    const auto& x = e.vg_basis;
    c.require(lie_bracket(x[0], x[1]) == x[2], "[X1,X2] != X3");
    c.require(lie_bracket(x[0], x[2]) == -x[1], "[X1,X3] != -X2");
    c.require(lie_bracket(x[1], x[2]).is_zero(), "[X2,X3] != 0");
    VerificationReport suite = zero_trailer_contact_suite();
    for (const auto& r : suite.checks)
        c.require(r.status == "pass", r.name + ": " + r.computed);
    c.finish();
}

void criterion7() {
    Criterion c("criterion 7: superposition and RK4 order", 5.0);
    const auto& basis = get_entry("zero_trailer").vg_basis;
    TDepCoefficients b = TDepCoefficients::parse("1;t;0");
    ISO2Element g = ISO2Element::parse("3/5,4/5;1,-2");
    SuperposeReport rep = check_superposition(basis, b, g, {0, 0, 0}, 0.0, 1.0, 1e-3, 1e-6);
    c.require(rep.pass, "superposition discrepancy " + std::to_string(rep.discrepancy));

    TDepCoefficients unicycle = TDepCoefficients::parse("1;1;0");
    auto err = [&](double h) {
        Trajectory t = integrate_rk4(basis, unicycle, {0, 0, 0}, 0.0, M_PI, h);
        double tt = t.times.back();
        return std::max(std::abs(t.states.back()[0] - std::sin(tt)),
                        std::abs(t.states.back()[1] - (1.0 - std::cos(tt))));
    };
    double order = std::log2(err(0.02) / err(0.01));
    c.require(order >= 3.7 && order <= 4.3,
              "observed RK4 order " + std::to_string(order));
    c.finish();
}

void criterion8() {
    Criterion c("criterion 8: Cartan-geometry examples", 10.0);
    {
        const CatalogEntry& e = get_entry("cartan_36");
        c.require(lie_bracket(e.generators[0], e.generators[2]) ==
                      parse_field("d_u1", e.chart),
                  "(3,6): [X1,X3] != d_u1");
        c.require(lie_bracket(e.generators[1], e.generators[0]) ==
                      parse_field("d_u2", e.chart),
                  "(3,6): [X2,X1] != d_u2");
        c.require(lie_bracket(e.generators[2], e.generators[1]) ==
                      parse_field("d_u3", e.chart),
                  "(3,6): [X3,X2] != d_u3");
        Distribution d(e.chart, e.generators);
        KContactReport kc =
            kcontact_verify(d, e.candidates[0].fields, sample_points(e.chart, 12345));
        c.require(kc.overall == "pass" && kc.spanning.empty_degenerate(),
                  "(3,6): three-contact check failed");
    }
    {
        Distribution d = cartan_235(parse_poly("q^2", cartan_235_chart()));
        DerivedFlag f = derived_flag(d, 5);
        c.require(f.ranks() == std::vector<int>{2, 3, 5}, "(2,3,5): flag ranks wrong");
        const CatalogEntry& e = get_entry("cartan_235");
        std::vector<Point> pts;
        for (const auto& p : sample_points(e.chart, 12345))
            pts.push_back(e.candidates[0].region.adjust(p));
        KContactReport kc = kcontact_verify(Distribution(e.chart, e.generators),
                                            e.candidates[0].fields, pts);
        c.require(kc.overall == "pass" || kc.overall == "pass-on-dense-subset",
                  "(2,3,5): three-contact check failed");
        VerificationReport rep = verify_entry("cartan_235");
        c.require(!rep.has_findings(), "(2,3,5): catalog verification has findings");
    }
    {
        const CatalogEntry& e = get_entry("cartan_47qc");
        Distribution d(e.chart, e.generators);
        std::vector<VectorField> all = e.candidates[0].fields;
        all.insert(all.end(), e.generators.begin(), e.generators.end());
        std::vector<std::vector<TrigPoly>> m;
        for (const auto& f : all) {
            std::vector<TrigPoly> row;
            for (std::size_t j = 0; j < e.chart->dim(); ++j) row.push_back(f.component(j));
            m.push_back(std::move(row));
        }
        TrigPoly det = trig_determinant(m, e.chart);
        TrigPoly one = TrigPoly::constant(e.chart, Rat(1));
        c.require(det == one || det == -one, "qc (4,7): determinant is not +-1");
        KContactReport kc =
            kcontact_verify(d, e.candidates[0].fields, sample_points(e.chart, 12345));
        c.require(kc.overall == "pass", "qc (4,7): three-contact check failed");
    }
    c.finish();
}

void criterion9() {
    Criterion c("criterion 9: classes 7-8 definite verdicts, class-3 branch finding", 300.0);
    for (const char* name : {"class7", "class8"}) {
        VerificationReport rep = verify_entry(name);
        c.require(!rep.checks.empty(), std::string(name) + ": no checks ran");
        for (const auto& r : rep.checks)
            c.require(r.status == "pass" || r.status == "finding" || r.status == "fail" ||
                          r.status == "info",
                      std::string(name) + ": indefinite verdict in " + r.name);
        // the spanning certificate must be a not-identically-zero polynomial,
        // or a finding must say otherwise; silence is not acceptable
        const CheckRecord* kc = find_check(rep, "k-contact");
        c.require(kc != nullptr, std::string(name) + ": no k-contact record");
        if (kc)
            c.require(kc->status == "pass" || kc->status == "finding",
                      std::string(name) + ": k-contact verdict is not definite");
    }
    VerificationReport rep3 = verify_entry("class3");
    const CheckRecord* branch = find_check(rep3, "k-contact (x5 = 0)");
    c.require(branch != nullptr, "class3: x5=0 branch verdict missing");
    bool offending = false;
    for (const auto& r : rep3.checks)
        if (r.status == "finding" && r.computed.find("x5*d_x2") != std::string::npos)
            offending = true;
    c.require(offending, "class3: offending bracket [S3,X2] = x5*d_x2 not reported");
    c.finish();
}

void criterion10() {
    Criterion c("criterion 10: core property suites", 30.0);
    std::mt19937_64 rng(424242);
    auto chart = make_chart("x1 x2 theta:angle");
    std::uniform_int_distribution<long> coeff(-3, 3);
    std::uniform_int_distribution<unsigned> expd(0, 2);
    auto random_poly = [&]() {
        TrigPoly p = TrigPoly::zero(chart);
        for (int t = 0; t < 3; ++t) {
            Monomial m{std::vector<std::uint32_t>(chart->symbol_count(), 0)};
            for (auto& e : m.exps) e = expd(rng);
            p.add_term(std::move(m), Rat(coeff(rng)));
        }
        return p;
    };
    auto random_field = [&]() {
        VectorField v(chart);
        for (std::size_t i = 0; i < chart->dim(); ++i) v.set_component(i, random_poly());
        return v;
    };

    for (int trial = 0; trial < 10; ++trial) {
        VectorField x = random_field(), y = random_field(), z = random_field();
        VectorField jac = lie_bracket(x, lie_bracket(y, z)) +
                          lie_bracket(y, lie_bracket(z, x)) +
                          lie_bracket(z, lie_bracket(x, y));
        c.require(jac.is_zero(), "Jacobi identity violated");

        std::vector<VectorField> ab{y, z};
        MultiVector lhs = schouten_vf_multivector(x, wedge_vectors(ab));
        std::vector<VectorField> l{lie_bracket(x, y), z}, r{y, lie_bracket(x, z)};
        c.require(lhs == wedge_vectors(l) + wedge_vectors(r),
                  "Schouten-Leibniz rule violated");

        std::vector<RatFrac> comps;
        for (std::size_t i = 0; i < chart->dim(); ++i) comps.emplace_back(random_poly());
        DiffForm w = make_one_form(chart, comps);
        c.require(exterior_derivative(exterior_derivative(w)).is_zero(), "d(dw) != 0");
        c.require(lie_derivative_form(x, w) == lie_derivative_cartan(x, w),
                  "Cartan formula disagreement");
    }

    for (const auto& name : list_entries()) {
        const CatalogEntry& e = get_entry(name);
        for (const auto& g : e.generators)
            c.require(parse_field(g.str(), e.chart) == g, "parser round-trip failed");
        for (const auto& set : e.candidates)
            for (const auto& s : set.fields)
                c.require(parse_field(s.str(), e.chart) == s, "parser round-trip failed");
    }

    const double h = 1e-6;
    for (int trial = 0; trial < 10; ++trial) {
        TrigPoly p = random_poly();
        Point pt = Point::random(chart, rng);
        std::vector<double> base(chart->symbol_count());
        for (std::size_t s = 0; s < base.size(); ++s)
            base[s] = pt.symbol_value(s).to_double();
        for (std::size_t coord = 0; coord < chart->dim(); ++coord) {
            double exact = p.derivative(coord).evaluate(pt).to_double();
            std::vector<double> up = base, dn = base;
            if (chart->coord(coord).kind == CoordKind::Angular) {
                std::size_t b = chart->symbol_base(coord);
                double ang = std::atan2(base[b], base[b + 1]);
                up[b] = std::sin(ang + h);
                up[b + 1] = std::cos(ang + h);
                dn[b] = std::sin(ang - h);
                dn[b + 1] = std::cos(ang - h);
            } else {
                up[chart->symbol_base(coord)] += h;
                dn[chart->symbol_base(coord)] -= h;
            }
            double fd = (p.evaluate_symbols(up) - p.evaluate_symbols(dn)) / (2 * h);
            double scale = std::max({1.0, std::abs(exact), std::abs(fd)});
            c.require(std::abs(fd - exact) / scale <= 1e-6,
                      "derivative vs finite difference exceeded 1e-6");
        }
    }
    c.finish();
}

}  // namespace

int main() {
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    criterion9();
    criterion10();
    if (g_failures == 0)
        std::printf("all acceptance criteria passed\n");
    else
        std::printf("%d acceptance criteria FAILED\n", g_failures);
    return g_failures;
}
