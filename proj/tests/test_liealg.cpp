#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "catalog/catalog.hpp"
#include "symcore/errors.hpp"
#include "symcore/parser.hpp"

using namespace kontact;

namespace {

/// Independent consistency oracle: the system A a = b is solvable iff
/// rank(A) == rank([A|b]) over the monomial matrix.
bool solvable_by_rank_test(const VectorField& x, const std::vector<VectorField>& basis) {
    const ChartPtr& chart = basis[0].chart();
    std::vector<std::vector<Rat>> a_rows, ab_rows;
    for (std::size_t c = 0; c < chart->dim(); ++c) {
        std::set<Monomial, TermOrder> monos;
        for (const auto& b : basis)
            for (const auto& [m, v] : b.component(c).terms()) monos.insert(m);
        for (const auto& [m, v] : x.component(c).terms()) monos.insert(m);
        for (const auto& m : monos) {
            std::vector<Rat> row;
            for (const auto& b : basis) {
                auto it = b.component(c).terms().find(m);
                row.push_back(it == b.component(c).terms().end() ? Rat(0) : it->second);
            }
            a_rows.push_back(row);
            auto it = x.component(c).terms().find(m);
            row.push_back(it == x.component(c).terms().end() ? Rat(0) : it->second);
            ab_rows.push_back(row);
        }
    }
    return rational_rank(a_rows) == rational_rank(ab_rows);
}

}  // namespace

TEST_CASE("constant decomposition") {
    const CatalogEntry& c1 = get_entry("class1");
    auto a = constant_decompose(parse_field("d_x3", c1.chart), c1.vg_basis);
    REQUIRE(a.has_value());
    CHECK(*a == std::vector<Rat>{Rat(0), Rat(0), Rat(1), Rat(0)});

    auto b = constant_decompose(-parse_field("d_x2", c1.chart), c1.vg_basis);
    REQUIRE(b.has_value());
    CHECK(*b == std::vector<Rat>{Rat(0), Rat(0), Rat(0), Rat(-1)});

    CHECK_FALSE(constant_decompose(parse_field("x1*d_x2", c1.chart), c1.vg_basis));
}

TEST_CASE("decomposition agrees with the rank-test oracle") {
    const CatalogEntry& c3 = get_entry("class3");
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<long> coeff(-3, 3);
    std::uniform_int_distribution<int> pick(0, 5);
    for (int trial = 0; trial < 30; ++trial) {
        // random element of the span, occasionally corrupted
        VectorField v = VectorField::zero(c3.chart);
        for (int k = 0; k < 3; ++k)
            v = v + c3.vg_basis[static_cast<std::size_t>(pick(rng))] * Rat(coeff(rng));
        if (trial % 3 == 0) v = v + parse_field("x1*x2*d_x1", c3.chart);
        bool mine = constant_decompose(v, c3.vg_basis).has_value();
        CHECK(mine == solvable_by_rank_test(v, c3.vg_basis));
        if (auto a = constant_decompose(v, c3.vg_basis)) {
            VectorField rebuilt = VectorField::zero(c3.chart);
            for (std::size_t k = 0; k < a->size(); ++k)
                rebuilt = rebuilt + c3.vg_basis[k] * (*a)[k];
            CHECK(rebuilt == v);
        }
    }
}

TEST_CASE("closure of the class-1 pair") {
    const CatalogEntry& c1 = get_entry("class1");
    ClosureResult res = bracket_closure(c1.generators, 4);
    REQUIRE(res.status == ClosureResult::Status::Closed);
    REQUIRE(res.basis.size() == 4);
    CHECK(res.basis[2] == parse_field("d_x3", c1.chart));
    CHECK(res.basis[3] == parse_field("d_x2", c1.chart));
    REQUIRE(res.constants.has_value());
    CHECK(res.constants->get(1, 2, 3) == Rat(1));
    CHECK(res.constants->get(2, 3, 4) == Rat(-1));
    // every other independent entry vanishes
    for (const auto& [idx, c] : res.constants->entries()) {
        auto [i, j, k] = idx;
        bool known = (i == 1 && j == 2 && k == 3) || (i == 2 && j == 3 && k == 4);
        CHECK(known);
    }
    CHECK(res.constants->jacobi_holds());
}

TEST_CASE("closure of the zero-trailer pair gives iso(2) relations") {
    const CatalogEntry& zt = get_entry("zero_trailer");
    ClosureResult res = bracket_closure(zt.generators, 3);
    REQUIRE(res.status == ClosureResult::Status::Closed);
    REQUIRE(res.basis.size() == 3);
    CHECK(res.basis[2] == zt.vg_basis[2]);
    CHECK(res.constants->get(1, 2, 3) == Rat(1));
    CHECK(res.constants->get(1, 3, 2) == Rat(-1));
    for (int k = 1; k <= 3; ++k) CHECK(res.constants->get(2, 3, k) == Rat(0));
}

TEST_CASE("closure respects the dimension bound") {
    auto chart = make_chart("x1");
    std::vector<VectorField> affine{VectorField::basis(chart, 0),
                                    parse_field("x1*d_x1", chart)};
    ClosureResult res = bracket_closure(affine, 2);
    REQUIRE(res.status == ClosureResult::Status::Closed);
    CHECK(res.basis.size() == 2);
    CHECK(res.constants->get(1, 2, 1) == Rat(1));  // [d, x d] = d

    std::vector<VectorField> sl2ish{parse_field("d_x1", chart),
                                    parse_field("x1^2*d_x1", chart)};
    ClosureResult bounded = bracket_closure(sl2ish, 2);
    CHECK(bounded.status == ClosureResult::Status::NotClosedWithinBound);
    ClosureResult sl2 = bracket_closure(sl2ish, 3);
    CHECK(sl2.status == ClosureResult::Status::Closed);
    CHECK(sl2.basis.size() == 3);
    CHECK(sl2.constants->jacobi_holds());
}

TEST_CASE("closure constants satisfy Jacobi and self-verify") {
    for (const char* name : {"class2", "class3", "class5", "class6"}) {
        const CatalogEntry& e = get_entry(name);
        ClosureResult res = bracket_closure(e.generators, 16);
        REQUIRE(res.status == ClosureResult::Status::Closed);
        CHECK(res.basis.size() == e.vg_basis.size());
        CHECK(res.constants->jacobi_holds());
        ConstantsCheck self = verify_structure_constants(res.basis, *res.constants);
        CHECK(self.all_match);
        // closure stays inside the span of the published basis
        for (const auto& b : res.basis)
            CHECK(constant_decompose(b, e.vg_basis).has_value());
    }
}

TEST_CASE("verify_structure_constants flags injected faults") {
    const CatalogEntry& c1 = get_entry("class1");
    ConstantsCheck good = verify_structure_constants(c1.vg_basis, *c1.expected_constants);
    CHECK(good.all_match);
    CHECK(good.is_vg_basis);

    StructureConstants bad = *c1.expected_constants;
    bad.set(1, 2, 3, Rat(2));
    ConstantsCheck check = verify_structure_constants(c1.vg_basis, bad);
    CHECK_FALSE(check.all_match);
    bool found = false;
    for (const auto& e : check.entries)
        if (e.i == 1 && e.j == 2 && !e.match) found = true;
    CHECK(found);
}

TEST_CASE("locally automorphic test") {
    const CatalogEntry& zt = get_entry("zero_trailer");
    CHECK(is_locally_automorphic(zt.vg_basis).pass);
    const CatalogEntry& c1 = get_entry("class1");
    CHECK(is_locally_automorphic(c1.vg_basis).pass);

    auto c2 = make_chart("x1 x2");
    std::vector<VectorField> degenerate{VectorField::basis(c2, 0),
                                        VectorField::basis(c2, 0)};
    CHECK_FALSE(is_locally_automorphic(degenerate).pass);
}
