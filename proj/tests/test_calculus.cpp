#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "calculus/forms.hpp"
#include "symcore/errors.hpp"
#include "symcore/parser.hpp"

using namespace kontact;

namespace {

VectorField random_field(const ChartPtr& chart, std::mt19937_64& rng, unsigned max_exp = 2) {
    std::uniform_int_distribution<long> coeff(-3, 3);
    std::uniform_int_distribution<unsigned> expd(0, max_exp);
    std::uniform_int_distribution<int> nterms(0, 2);
    VectorField v(chart);
    for (std::size_t i = 0; i < chart->dim(); ++i) {
        TrigPoly p = TrigPoly::zero(chart);
        int n = nterms(rng) + 1;
        for (int t = 0; t < n; ++t) {
            Monomial m{std::vector<std::uint32_t>(chart->symbol_count(), 0)};
            for (auto& e : m.exps) e = expd(rng);
            p.add_term(std::move(m), Rat(coeff(rng)));
        }
        v.set_component(i, p);
    }
    return v;
}

DiffForm random_one_form(const ChartPtr& chart, std::mt19937_64& rng) {
    std::uniform_int_distribution<long> coeff(-3, 3);
    std::uniform_int_distribution<unsigned> expd(0, 2);
    std::vector<RatFrac> comps;
    for (std::size_t i = 0; i < chart->dim(); ++i) {
        TrigPoly p = TrigPoly::zero(chart);
        for (int t = 0; t < 2; ++t) {
            Monomial m{std::vector<std::uint32_t>(chart->symbol_count(), 0)};
            for (auto& e : m.exps) e = expd(rng);
            p.add_term(std::move(m), Rat(coeff(rng)));
        }
        comps.emplace_back(p);
    }
    return make_one_form(chart, std::move(comps));
}

}  // namespace

TEST_CASE("class-1 bracket relations") {
    auto chart = make_chart("x1 x2 x3 x4");
    VectorField x1 = parse_field("d_x4", chart);
    VectorField x2 = parse_field("x4*d_x3 + x3*d_x2 + d_x1", chart);
    CHECK(lie_bracket(x1, x2) == parse_field("d_x3", chart));
    CHECK(lie_bracket(x2, parse_field("d_x3", chart)) == -parse_field("d_x2", chart));
    // the Reeb candidate commutes with X2
    VectorField r2 = parse_field("x1*d_x2 + d_x3", chart);
    CHECK(lie_bracket(r2, x2).is_zero());
    CHECK_THROWS_AS(lie_bracket(x1, parse_field("d_y", make_chart("y"))), ChartMismatch);
}

TEST_CASE("bracket is antisymmetric and satisfies Jacobi") {
    auto chart = make_chart("x1 x2 theta:angle");
    std::mt19937_64 rng(101);
    for (int trial = 0; trial < 15; ++trial) {
        VectorField x = random_field(chart, rng);
        VectorField y = random_field(chart, rng);
        VectorField z = random_field(chart, rng);
        CHECK(lie_bracket(x, y) == -lie_bracket(y, x));
        VectorField jac = lie_bracket(x, lie_bracket(y, z)) +
                          lie_bracket(y, lie_bracket(z, x)) +
                          lie_bracket(z, lie_bracket(x, y));
        CHECK(jac.is_zero());
    }
}

TEST_CASE("wedge of vectors") {
    auto chart = make_chart("x1 x2 x3");
    VectorField e1 = VectorField::basis(chart, 0);
    VectorField e2 = VectorField::basis(chart, 1);
    std::vector<VectorField> same{e1, e1};
    CHECK(wedge_vectors(same).is_zero());
    std::vector<VectorField> pair{e1, e2};
    MultiVector b = wedge_vectors(pair);
    CHECK(b.get({0, 1}).is_one());
    CHECK(b.components().size() == 1);

    // zero-trailer X1^X2^X3 collapses to a constant trivector
    auto zt = make_chart("xi1 xi2 theta0:angle");
    std::vector<VectorField> frame{
        parse_field("d_theta0", zt),
        parse_field("cos(theta0)*d_xi1 + sin(theta0)*d_xi2", zt),
        parse_field("-sin(theta0)*d_xi1 + cos(theta0)*d_xi2", zt)};
    MultiVector tri = wedge_vectors(frame);
    CHECK(tri.components().size() == 1);
    CHECK(tri.get({0, 1, 2}).is_constant());
    CHECK_FALSE(tri.is_zero());
}

TEST_CASE("Schouten bracket basics") {
    auto chart = make_chart("x1 x2 x3");
    VectorField e1 = VectorField::basis(chart, 0);
    std::vector<VectorField> pair23{VectorField::basis(chart, 1), VectorField::basis(chart, 2)};
    CHECK(schouten_vf_multivector(e1, wedge_vectors(pair23)).is_zero());

    VectorField x1e1 = parse_field("x1*d_x1", chart);
    std::vector<VectorField> pair12{e1, VectorField::basis(chart, 1)};
    MultiVector b12 = wedge_vectors(pair12);
    CHECK(schouten_vf_multivector(x1e1, b12) == -b12);
}

TEST_CASE("Schouten bracket is a derivation over the wedge") {
    auto chart = make_chart("x1 x2 x3");
    std::mt19937_64 rng(202);
    for (int trial = 0; trial < 12; ++trial) {
        VectorField y = random_field(chart, rng, 1);
        VectorField a = random_field(chart, rng, 1);
        VectorField b = random_field(chart, rng, 1);
        std::vector<VectorField> ab{a, b};
        MultiVector lhs = schouten_vf_multivector(y, wedge_vectors(ab));
        std::vector<VectorField> ya_b{lie_bracket(y, a), b};
        std::vector<VectorField> a_yb{a, lie_bracket(y, b)};
        MultiVector rhs = wedge_vectors(ya_b) + wedge_vectors(a_yb);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("exterior derivative identities") {
    auto chart = make_chart("xi1 xi2 theta0:angle");
    DiffForm dxi1 = coordinate_differential(chart, 0);
    CHECK(exterior_derivative(dxi1).is_zero());

    // eta3 = dxi2 - xi1 dtheta0, eta2 = dxi1 + xi2 dtheta0, eta1 = dtheta0
    auto frac = [&](const char* s) { return RatFrac(parse_poly(s, chart)); };
    DiffForm eta1 = make_one_form(chart, {frac("0"), frac("0"), frac("1")});
    DiffForm eta2 = make_one_form(chart, {frac("1"), frac("0"), frac("xi2")});
    DiffForm eta3 = make_one_form(chart, {frac("0"), frac("1"), frac("-xi1")});
    CHECK(exterior_derivative(eta3) == wedge_forms(eta1, eta2));
    CHECK(exterior_derivative(eta2) == -wedge_forms(eta1, eta3));

    DiffForm vol = wedge_forms(eta3, exterior_derivative(eta3));
    CHECK(vol.components().size() == 1);
    CHECK_FALSE(vol.is_zero());

    DiffForm v123 = wedge_forms(wedge_forms(eta1, eta2), eta3);
    CHECK(v123.get({0, 1, 2}) == frac("1"));
}

TEST_CASE("d of d vanishes on random forms") {
    auto chart = make_chart("x1 x2 theta:angle");
    std::mt19937_64 rng(303);
    for (int trial = 0; trial < 12; ++trial) {
        // 0-forms
        DiffForm f(chart, 0);
        f.add({}, RatFrac(random_field(chart, rng).component(0)));
        CHECK(exterior_derivative(exterior_derivative(f)).is_zero());
        // 1-forms
        DiffForm w = random_one_form(chart, rng);
        CHECK(exterior_derivative(exterior_derivative(w)).is_zero());
    }
}

TEST_CASE("interior product") {
    auto chart = make_chart("x1 x2 x3");
    DiffForm dx1 = coordinate_differential(chart, 0);
    DiffForm dx12 = wedge_forms(dx1, coordinate_differential(chart, 1));
    VectorField e1 = VectorField::basis(chart, 0);
    VectorField e2 = VectorField::basis(chart, 1);
    DiffForm c = interior_product(e1, dx1);
    CHECK(c.degree() == 0);
    CHECK(c.get({}).num().is_one());
    CHECK(interior_product(e2, dx12) == -dx1);
}

TEST_CASE("Lie derivative: direct formula agrees with the Cartan route") {
    auto chart = make_chart("x1 x2 theta:angle");
    std::mt19937_64 rng(404);
    for (int trial = 0; trial < 12; ++trial) {
        VectorField x = random_field(chart, rng, 1);
        DiffForm w = random_one_form(chart, rng);
        CHECK(lie_derivative_form(x, w) == lie_derivative_cartan(x, w));
    }
    // L_{x1 d1} dx1 = dx1
    VectorField x1e1 = parse_field("x1*d_x1", chart);
    DiffForm dx1 = coordinate_differential(chart, 0);
    CHECK(lie_derivative_form(x1e1, dx1) == dx1);
    CHECK(lie_derivative_form(VectorField::basis(chart, 0), dx1).is_zero());
}

TEST_CASE("dual coframe duality") {
    auto zt = make_chart("xi1 xi2 theta0:angle");
    std::vector<VectorField> frame{
        parse_field("-xi2*d_xi1 + xi1*d_xi2 + d_theta0", zt),
        parse_field("d_xi1", zt),
        parse_field("d_xi2", zt)};
    std::vector<DiffForm> etas = dual_coframe(frame);
    RatFrac one = RatFrac(TrigPoly::constant(zt, Rat(1)));
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) {
            RatFrac p = pair_form_field(etas[i], frame[j]);
            if (i == j)
                CHECK(p == one);
            else
                CHECK(p.is_zero());
        }

    // constant frames dualize to coordinate differentials
    auto c3 = make_chart("x1 x2 x3");
    std::vector<VectorField> basis{VectorField::basis(c3, 0), VectorField::basis(c3, 1),
                                   VectorField::basis(c3, 2)};
    auto duals = dual_coframe(basis);
    for (std::size_t i = 0; i < 3; ++i) CHECK(duals[i] == coordinate_differential(c3, i));

    // non-constant determinant produces fractional coefficients
    auto c1 = make_chart("x1");
    std::vector<VectorField> scaled{parse_field("(1+x1^2)*d_x1", c1)};
    auto frac_duals = dual_coframe(scaled);
    TrigPoly den = parse_poly("1+x1^2", c1);
    CHECK(frac_duals[0].get({0}) == RatFrac(TrigPoly::constant(c1, Rat(1)), den));

    // identically singular frames are rejected
    std::vector<VectorField> sing{VectorField::basis(c3, 0), VectorField::basis(c3, 0),
                                  VectorField::basis(c3, 2)};
    CHECK_THROWS_AS(dual_coframe(sing), DomainError);
}

TEST_CASE("field evaluation") {
    auto chart = make_chart("x1 x2 x3 x4 x5");
    VectorField x2 = parse_field("x5*(d_x1 + x3*d_x2 + x4*d_x3) + d_x4", chart);
    Point p0 = Point::parse(chart, "0,0,0,0,0");
    auto v = x2.evaluate(p0);
    CHECK(v == std::vector<Rat>{Rat(0), Rat(0), Rat(0), Rat(1), Rat(0)});
    Point p1 = Point::parse(chart, "0,0,1,2,3");
    auto v1 = x2.evaluate(p1);
    CHECK(v1 == std::vector<Rat>{Rat(3), Rat(3), Rat(6), Rat(1), Rat(0)});

    // float mode agrees with exact mode at rationalized inputs
    std::vector<double> state{0.0, 0.0, 1.0, 2.0, 3.0};
    auto vf = x2.evaluate_state(state);
    for (std::size_t i = 0; i < 5; ++i)
        CHECK(vf[i] == doctest::Approx(v1[i].to_double()).epsilon(1e-12));
}
