#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>
#include <sstream>

#include "catalog/catalog.hpp"
#include "liesys/liesys.hpp"
#include "symcore/errors.hpp"
#include "symcore/parser.hpp"

using namespace kontact;

namespace {

const std::vector<VectorField>& zt_basis() {
    static const std::vector<VectorField> basis = get_entry("zero_trailer").vg_basis;
    return basis;
}

}  // namespace

TEST_CASE("coefficient parsing and evaluation") {
    TDepCoefficients b = TDepCoefficients::parse("1; t; 0");
    REQUIRE(b.size() == 3);
    CHECK(b.eval(0, 2.5) == 1.0);
    CHECK(b.eval(1, 2.5) == 2.5);
    CHECK(b.eval(2, 2.5) == 0.0);

    TDepCoefficients p = TDepCoefficients::parse("3/2*t^2 - 1");
    CHECK(p.eval(0, 2.0) == doctest::Approx(5.0));
    CHECK(p.str() == "3/2*t^2 - 1");
    CHECK_THROWS_AS(TDepCoefficients::parse(""), Error);
}

TEST_CASE("RK4 integrates a constant field exactly") {
    auto chart = make_chart("x1");
    std::vector<VectorField> basis{VectorField::basis(chart, 0)};
    TDepCoefficients b({{Rat(1)}});
    Trajectory t = integrate_rk4(basis, b, {0.0}, 0.0, 1.0, 1e-3);
    CHECK(std::abs(t.states.back()[0] - 1.0) < 1e-12);
    CHECK(t.times.size() == 1001);
}

TEST_CASE("unicycle arc matches the closed form") {
    TDepCoefficients b = TDepCoefficients::parse("1;1;0");
    Trajectory t = integrate_rk4(zt_basis(), b, {0.0, 0.0, 0.0}, 0.0, M_PI, 1e-3);
    double err = 0.0;
    for (std::size_t i = 0; i < t.times.size(); ++i) {
        double tt = t.times[i];
        err = std::max(err, std::abs(t.states[i][0] - std::sin(tt)));
        err = std::max(err, std::abs(t.states[i][1] - (1.0 - std::cos(tt))));
        err = std::max(err, std::abs(t.states[i][2] - tt));
    }
    CHECK(err < 1e-8);
}

TEST_CASE("RK4 order on the unicycle is close to four") {
    TDepCoefficients b = TDepCoefficients::parse("1;1;0");
    auto global_error = [&](double h) {
        Trajectory t = integrate_rk4(zt_basis(), b, {0.0, 0.0, 0.0}, 0.0, M_PI, h);
        double tt = t.times.back();
        double e1 = std::abs(t.states.back()[0] - std::sin(tt));
        double e2 = std::abs(t.states.back()[1] - (1.0 - std::cos(tt)));
        return std::max(e1, e2);
    };
    double eh = global_error(0.02), eh2 = global_error(0.01);
    double order = std::log2(eh / eh2);
    CHECK(order >= 3.7);
    CHECK(order <= 4.3);
}

TEST_CASE("float-mode field evaluation matches exact evaluation") {
    std::mt19937_64 rng(31);
    for (const char* name : {"zero_trailer", "class3", "cartan_47qc"}) {
        const CatalogEntry& e = get_entry(name);
        const auto& fields = e.vg_basis.empty() ? e.generators : e.vg_basis;
        for (int trial = 0; trial < 20; ++trial) {
            Point p = Point::random(e.chart, rng);
            std::vector<double> state(e.chart->dim());
            for (std::size_t i = 0; i < e.chart->dim(); ++i) {
                std::size_t base = e.chart->symbol_base(i);
                if (e.chart->coord(i).kind == CoordKind::Angular)
                    state[i] = std::atan2(p.symbol_value(base).to_double(),
                                          p.symbol_value(base + 1).to_double());
                else
                    state[i] = p.symbol_value(base).to_double();
            }
            for (const auto& f : fields) {
                auto exact = f.evaluate(p);
                auto approx = f.evaluate_state(state);
                for (std::size_t i = 0; i < exact.size(); ++i) {
                    double ev = exact[i].to_double();
                    double scale = std::max(1.0, std::abs(ev));
                    CHECK(std::abs(approx[i] - ev) / scale < 1e-12);
                }
            }
        }
    }
}

TEST_CASE("ISO(2) action and group law") {
    ISO2Element id = ISO2Element::identity();
    std::vector<double> x{1.0, -2.0, 0.5};
    CHECK(iso2_apply(id, x) == x);

    // quarter turn
    ISO2Element q = ISO2Element::parse("1,0;0,0");
    auto y = iso2_apply(q, {1.0, 0.0, 0.0});
    CHECK(y[0] == doctest::Approx(0.0));
    CHECK(y[1] == doctest::Approx(1.0));
    CHECK(y[2] == doctest::Approx(M_PI / 2));

    CHECK_THROWS_AS(ISO2Element::parse("1,1;0,0"), DomainError);

    // composition is exact and matches acting twice
    ISO2Element g1 = ISO2Element::parse("3/5,4/5;1,-2");
    ISO2Element g2 = ISO2Element::parse("-5/13,12/13;1/2,3");
    ISO2Element g12 = g1.compose(g2);
    CHECK((g12.s * g12.s + g12.c * g12.c).is_one());
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    for (int i = 0; i < 10; ++i) {
        std::vector<double> p{u(rng), u(rng), u(rng)};
        auto lhs = iso2_apply(g1, iso2_apply(g2, p));
        auto rhs = iso2_apply(g12, p);
        for (int c = 0; c < 3; ++c) CHECK(lhs[c] == doctest::Approx(rhs[c]).epsilon(1e-12));
    }

    // exactness of the circle constraint under repeated composition
    ISO2Element acc = ISO2Element::identity();
    for (int i = 0; i < 50; ++i) acc = acc.compose(g1);
    CHECK((acc.s * acc.s + acc.c * acc.c).is_one());
}

TEST_CASE("superposition rule on the zero trailer") {
    TDepCoefficients b = TDepCoefficients::parse("1;t;0");
    ISO2Element g = ISO2Element::parse("3/5,4/5;1,-2");

    SuperposeReport id_rep = check_superposition(
        zt_basis(), b, ISO2Element::identity(), {0, 0, 0}, 0.0, 1.0, 1e-3, 1e-12);
    CHECK(id_rep.pass);
    CHECK(id_rep.discrepancy == 0.0);

    SuperposeReport rep =
        check_superposition(zt_basis(), b, g, {0, 0, 0}, 0.0, 1.0, 1e-3, 1e-6);
    CHECK(rep.pass);
    CHECK(rep.discrepancy < 1e-6);

    // a hopeless tolerance fails once roundoff is visible (large states)
    SuperposeReport coarse =
        check_superposition(zt_basis(), b, g, {1000, -2000, 0.7}, 0.0, 1.0, 0.1, 1e-15);
    CHECK_FALSE(coarse.pass);
    CHECK(coarse.discrepancy > 1e-15);
}

TEST_CASE("superposition discrepancy stays inside the h^4 envelope") {
    // The theta equation decouples and the frame {X2, X3} is
    // rotation-equivariant, so the group action maps RK4 orbits to RK4
    // orbits exactly; the measured discrepancy is pure roundoff, far below
    // the h^4 integration-error envelope.
    TDepCoefficients b = TDepCoefficients::parse("1;t;0");
    ISO2Element g = ISO2Element::parse("3/5,4/5;1,-2");
    auto disc = [&](double h) {
        return check_superposition(zt_basis(), b, g, {0.1, -0.2, 0.3}, 0.0, 1.0, h, 1.0)
            .discrepancy;
    };
    for (double h : {0.02, 0.01, 0.001}) CHECK(disc(h) <= h * h * h * h);
}

TEST_CASE("CSV export shape") {
    auto chart = make_chart("x1");
    std::vector<VectorField> basis{VectorField::basis(chart, 0)};
    TDepCoefficients b({{Rat(1)}});
    Trajectory t = integrate_rk4(basis, b, {0.5}, 0.0, 0.01, 0.005);
    std::ostringstream out;
    t.write_csv(out);
    std::string csv = out.str();
    CHECK(csv.rfind("t,x1\n", 0) == 0);
    CHECK(csv.find("0.505") != std::string::npos);
    // 17 significant digits keep values round-trippable
    CHECK(csv.find("0.0050000000000000001") != std::string::npos);
}

TEST_CASE("integration rejects bad input") {
    auto chart = make_chart("x1");
    std::vector<VectorField> basis{VectorField::basis(chart, 0)};
    TDepCoefficients b({{Rat(1)}});
    CHECK_THROWS_AS(integrate_rk4(basis, b, {0.0}, 0.0, 1.0, -1.0), DomainError);
    CHECK_THROWS_AS(integrate_rk4(basis, b, {0.0, 1.0}, 0.0, 1.0, 0.1), DomainError);
    TDepCoefficients wrong = TDepCoefficients::parse("1;1");
    CHECK_THROWS_AS(integrate_rk4(basis, wrong, {0.0}, 0.0, 1.0, 0.1), DomainError);
}
