#include "catalog/catalog.hpp"

#include <map>
#include <mutex>

#include "symcore/errors.hpp"
#include "symcore/parser.hpp"

namespace kontact {

Point Region::adjust(const Point& p) const {
    switch (kind) {
        case Kind::Everywhere:
            return p;
        case Kind::CoordEquals:
            return p.with_linear(coord, value);
        case Kind::CoordDiffers:
            if (p.linear_value(coord) == value)
                return p.with_linear(coord, value + Rat(1));
            return p;
    }
    return p;
}

namespace {

struct EntryBuilder {
    CatalogEntry e;

    EntryBuilder(std::string name, std::string title, const std::string& chart_decl) {
        e.name = std::move(name);
        e.title = std::move(title);
        e.chart = make_chart(chart_decl);
    }

    EntryBuilder& gens(std::vector<std::string> exprs) {
        for (const auto& s : exprs) {
            e.generators.push_back(parse_field(s, e.chart));
            e.generator_exprs.push_back(s);
        }
        return *this;
    }

    EntryBuilder& basis(std::vector<std::string> exprs) {
        for (const auto& s : exprs) e.vg_basis.push_back(parse_field(s, e.chart));
        return *this;
    }

    /// triples: {i, j, k, value} with 1-based indices.
    EntryBuilder& constants(std::vector<std::tuple<int, int, int, long>> triples,
                            std::string locus) {
        StructureConstants sc(static_cast<int>(e.vg_basis.size()));
        for (const auto& [i, j, k, v] : triples) sc.set(i, j, k, Rat(v));
        e.expected_constants = std::move(sc);
        e.constants_locus = std::move(locus);
        e.expected_closure_dim = static_cast<int>(e.vg_basis.size());
        return *this;
    }

    EntryBuilder& candidates(Region region, std::vector<std::string> names,
                             std::vector<std::string> exprs, std::string locus) {
        CandidateSet set;
        set.region = std::move(region);
        set.names = names;
        for (const auto& s : exprs) set.fields.push_back(parse_field(s, e.chart));
        set.paper_locus = std::move(locus);
        e.candidates.push_back(std::move(set));
        return *this;
    }

    EntryBuilder& claim_bracket(std::size_t i, std::size_t j, const std::string& expected,
                                std::string label, std::string locus) {
        e.bracket_claims.push_back(
            {i, j, parse_field(expected, e.chart), std::move(label), std::move(locus)});
        return *this;
    }

    EntryBuilder& verdict(int k, std::string v) {
        e.expected_k = k;
        e.expected_verdict = std::move(v);
        return *this;
    }

    EntryBuilder& goursat() {
        e.goursat_expected = true;
        return *this;
    }

    EntryBuilder& obstruction() {
        e.run_obstruction = true;
        return *this;
    }

    EntryBuilder& points(std::vector<std::string> tuples) {
        for (const auto& t : tuples) e.special_points.push_back(Point::parse(e.chart, t));
        return *this;
    }

    CatalogEntry build() { return std::move(e); }
};

Region everywhere() { return Region{}; }

Region coord_eq(std::size_t coord, long value, std::string desc) {
    return Region{Region::Kind::CoordEquals, coord, Rat(value), std::move(desc)};
}

Region coord_ne(std::size_t coord, long value, std::string desc) {
    return Region{Region::Kind::CoordDiffers, coord, Rat(value), std::move(desc)};
}

// Shared tower of polynomial symmetries R1..R4 (chains of length 2..5 use a
// prefix of this list).
const char* kR1 = "d_x2";
const char* kR2 = "x1*d_x2 + d_x3";
const char* kR3 = "1/2*x1^2*d_x2 + x1*d_x3 + d_x4";
const char* kR4 = "1/6*x1^3*d_x2 + 1/2*x1^2*d_x3 + x1*d_x4 + d_x5";

// Abbreviations used by the classification table for classes 7 and 8.
const std::string kB = "(-3*x2+x1*x3)";
const std::string kC = "(x2+x1*x3)";
const std::string kD = "(x6+1)";
const std::string kE = "(x5*(x1-x5*x4))";

std::string y1_field() {
    return "x1^3*d_x2 + 3*x1^2*d_x3 + 6*x1*d_x4 - 6*x5^2*d_x5";
}

std::string y2_field() {
    return "-x1^3*d_x1 - 3*x1^2*x2*d_x2 - 6*x1*x2*d_x3 - (6*" + kC +
           " - 3*x1^2*x4)*d_x4 - 6*x5*(x1^2 - 2*x3*x5)*d_x5";
}

std::string y3_field() {
    return "2*x1^2*" + kB + "*d_x1 + (9*x1*x2^2 - x1^3*x3^2)*d_x2 + 3*(3*x2 - x1*x3)*" + kC +
           "*d_x3 + (24*x2*x3 - 6*x1*" + kC +
           "*x4 + 2*x1^3*x4^2)*d_x4 + 6*x5*(x1^2*x3 - x1^3*x4 - (4*x3^2 + 3*x2*x4)*x5 + "
           "3*x1*(x2 + x3*x4*x5))*d_x5";
}

std::string y4_field() {
    return "-3*x1*" + kB + "^2*d_x1 + (-3*x2 - 2*x1*x3)*" + kB + "^2*d_x2 - 6*x3*" + kB +
           "^2*d_x3 - 3*(3*x2 - x1*x3)*(8*x3^2 - 9*x1*x3*x4 + x4*(3*x2 + 2*x1^2*x4))*d_x4 + "
           "6*x5*(2*x3 - x1*x4)*(3*x1*" + kB +
           " + x5*(4*x3^2 - 7*x1*x3*x4 + x4*(9*x2 + x1^2*x4)))*d_x5";
}

std::vector<std::string> class7_candidates() {
    std::string s1 = y1_field() + " - 18*x5*" + kD + "*d_x6";
    std::string s2 = y2_field() + " + (12*x4*x5^3 - 12*x1*x5^2 - 9*x1^2*" + kD +
                     " + 36*x3*x5*" + kD + ")*d_x6";
    std::string s3 = y3_field() + " + (12*x1^2*(x3*" + kD + " - x4*x5^2) - 2*x1^3*(3*x5 + 5*x4*" +
                     kD + ") - 6*x5*(8*x3*x4*x5^2 + 12*x3^2*" + kD + " + 9*x2*x4*" + kD +
                     ") + 6*x1*(3*x4^2*x5^3 + 4*x2*" + kD + " + x3*x5*(8*x5 + 9*x4*" + kD +
                     ")))*d_x6";
    std::string s4 = y4_field() + " + (9*x2^2*" + kD +
                     " + 48*x3^2*x5*(x3 + x4*x5^2 + x3*x6) - 6*x1*x3*x5*(8*x3*x5 + 9*x4^2*x5^2 + "
                     "18*x3*x4*" + kD + ") - 2*x1^3*(3*x3*x5 + 5*x3*x4*" + kD +
                     " + 3*x4^2*x5*(x4 + 2*x5 + x4*x6)) + 3*x1^2*(4*x4^3*x5^3 + 7*x3^2*" + kD +
                     " + 2*x3*x4*x5*(10*x5 + 9*x4*" + kD + ")) + 6*x2*(3*x4^2*x5^3 + 18*x3*x4*x5*" +
                     kD + " + x1^2*(3*x5 + 5*x4*" + kD + ") - x1*(11*x3*" + kD +
                     " + 6*x4*x5^2 + 9*x4^2*x5*" + kD + ")))*d_x6";
    return {s1, s2, s3, s4};
}

std::vector<std::string> class8_candidates() {
    std::string s1 = y1_field() + " + 18*x5*x6*d_x6";
    std::string s2 = y2_field() + " + 3*x6*(3*(x1^2 - 4*x3*x5) + 4*" + kE + "*x5*x6)*d_x6";
    std::string s3 = y3_field() +
                     " + 2*x6*(-12*x1*x2 - 6*x1^2*x3 + 5*x1^3*x4 + 36*x3^2*x5 + 27*x2*x4*x5 - "
                     "27*x1*x3*x4*x5 + 3*" + kE + "*(x1^2 - 8*x3*x5 + 3*x1*x4*x5)*x6)*d_x6";
    std::string s4 = y4_field() +
                     " + 3*x6*(-9*x2^2 + 66*x1*x2*x3 - 21*x1^2*x3^2 - 30*x1^2*x2*x4 + "
                     "10*x1^3*x3*x4 - 48*x3^3*x5 - 108*x2*x3*x4*x5 + 108*x1*x3^2*x4*x5 + "
                     "54*x1*x2*x4^2*x5 - 54*x1^2*x3*x4^2*x5 + 6*x1^3*x4^3*x5 + 6*" + kE +
                     "*((8*x3^2 + 3*x2*x4)*x5 - 3*x1*(x2 + 3*x3*x4*x5) + x1^2*(x3 + "
                     "2*x4^2*x5))*x6)*d_x6";
    return {s1, s2, s3, s4};
}

CatalogEntry build_class1() {
    return EntryBuilder("class1", "Goursat class 1 on R^4", "x1 x2 x3 x4")
        .gens({"d_x4", "x4*d_x3 + x3*d_x2 + d_x1"})
        .basis({"d_x4", "x4*d_x3 + x3*d_x2 + d_x1", "d_x3", "d_x2"})
        .constants({{1, 2, 3, 1}, {2, 3, 4, -1}}, "Table 1, class 1, structure constants")
        .candidates(everywhere(), {"R1", "R2"}, {kR1, kR2}, "Table 1, class 1, Reeb fields")
        .verdict(2, "two-contact")
        .goursat()
        .build();
}

CatalogEntry build_class2() {
    return EntryBuilder("class2", "Goursat class 2 on R^5", "x1 x2 x3 x4 x5")
        .gens({"d_x5", "x5*d_x4 + x4*d_x3 + x3*d_x2 + d_x1"})
        .basis({"d_x5", "x5*d_x4 + x4*d_x3 + x3*d_x2 + d_x1", "d_x4", "d_x3", "d_x2"})
        .constants({{1, 2, 3, 1}, {2, 3, 4, -1}, {2, 4, 5, -1}},
                   "Table 1, class 2, structure constants")
        .candidates(everywhere(), {"R1", "R2", "R3"}, {kR1, kR2, kR3},
                    "Table 1, class 2, Reeb fields")
        .verdict(3, "three-contact")
        .goursat()
        .build();
}

CatalogEntry build_class3() {
    return EntryBuilder("class3", "Goursat class 3 on R^5", "x1 x2 x3 x4 x5")
        .gens({"d_x5", "x5*(d_x1 + x3*d_x2 + x4*d_x3) + d_x4"})
        .basis({"d_x5", "x5*(d_x1 + x3*d_x2 + x4*d_x3) + d_x4", "d_x1 + x3*d_x2 + x4*d_x3",
                "d_x3", "d_x2", "x5*d_x2"})
        .constants({{1, 2, 3, 1}, {1, 6, 5, 1}, {2, 3, 4, 1}, {2, 4, 6, -1}, {3, 4, 5, -1}},
                   "Table 1, class 3, structure constants")
        .candidates(coord_ne(4, 0, "x5 != 0"), {"S1", "S2", "S3"}, {kR1, kR2, kR3},
                    "Table 1, class 3, x5 != 0 branch")
        .candidates(coord_eq(4, 0, "x5 = 0"), {"S1", "S2", "S3"}, {"d_x1", "d_x2", "d_x3"},
                    "Table 1, class 3, x5=0 branch")
        .verdict(3, "three-contact")
        .goursat()
        .points({"1,1/2,2,3,0"})
        .build();
}

CatalogEntry build_class4() {
    return EntryBuilder("class4", "Goursat class 4 on R^6", "x1 x2 x3 x4 x5 x6")
        .gens({"d_x6", "x6*d_x5 + x5*d_x4 + x4*d_x3 + x3*d_x2 + d_x1"})
        .basis({"d_x6", "x6*d_x5 + x5*d_x4 + x4*d_x3 + x3*d_x2 + d_x1", "d_x5", "d_x4", "d_x3",
                "d_x2"})
        .constants({{1, 2, 3, 1}, {2, 3, 4, -1}, {2, 4, 5, -1}, {2, 5, 6, -1}},
                   "Table 1, class 4, structure constants")
        .candidates(everywhere(), {"R1", "R2", "R3", "R4"}, {kR1, kR2, kR3, kR4},
                    "Table 1, class 4, Reeb fields")
        .verdict(4, "four-contact")
        .goursat()
        .build();
}

CatalogEntry build_class5() {
    return EntryBuilder("class5", "Goursat class 5 on R^6", "x1 x2 x3 x4 x5 x6")
        .gens({"d_x6", "d_x5 + x6*(x5*d_x4 + x4*d_x3 + x3*d_x2 + d_x1)"})
        .basis({"d_x6", "d_x5 + x6*(x5*d_x4 + x4*d_x3 + x3*d_x2 + d_x1)",
                "d_x1 + x3*d_x2 + x4*d_x3 + x5*d_x4", "d_x4", "x6*d_x3", "d_x3", "x6^2*d_x2",
                "x6*d_x2", "d_x2"})
        .constants({{1, 2, 3, 1},
                    {1, 8, 9, 1},
                    {2, 3, 4, 1},
                    {1, 5, 6, 1},
                    {2, 4, 8, -1},
                    {2, 5, 7, -1},
                    {2, 6, 8, -1},
                    {3, 4, 6, -1},
                    {3, 5, 8, -1},
                    {3, 6, 9, -1},
                    {1, 7, 8, 2}},
                   "Table 1, class 5, structure constants")
        .candidates(everywhere(), {"R1", "R2", "R3", "R4"}, {kR1, kR2, kR3, kR4},
                    "Table 1, class 5, Reeb fields")
        .verdict(4, "four-contact")
        .goursat()
        .points({"1,2,1/2,3,1,0"})
        .build();
}

CatalogEntry build_class6() {
    return EntryBuilder("class6", "Goursat class 6 on R^6", "x1 x2 x3 x4 x5 x6")
        .gens({"d_x6", "x6*d_x5 + d_x4 + x5*(x4*d_x3 + x3*d_x2 + d_x1)"})
        .basis({"d_x6", "x6*d_x5 + d_x4 + x5*(x4*d_x3 + x3*d_x2 + d_x1)", "d_x5",
                "d_x1 + x3*d_x2 + x4*d_x3", "d_x3", "x5*d_x2", "x6*d_x2", "d_x2"})
        .constants({{1, 2, 3, 1},
                    {1, 7, 8, 1},
                    {2, 4, 5, 1},
                    {2, 6, 7, 1},
                    {3, 6, 8, 1},
                    {2, 3, 4, -1},
                    {2, 5, 6, -1},
                    {4, 5, 8, -1}},
                   "Table 1, class 6, structure constants")
        .verdict(0, "not-k-contact")
        .goursat()
        .obstruction()
        .points({"0,0,0,0,0,0", "1,2,3,4,0,5", "-1,1/2,2,-3,0,1"})
        .build();
}

CatalogEntry build_class7() {
    return EntryBuilder("class7", "Goursat class 7 on R^6", "x1 x2 x3 x4 x5 x6")
        .gens({"d_x6", "(x6+1)*d_x5 + d_x4 + x5*(x4*d_x3 + x3*d_x2 + d_x1)"})
        .basis({"d_x6", "(x6+1)*d_x5 + d_x4 + x5*(x4*d_x3 + x3*d_x2 + d_x1)", "d_x5",
                "d_x1 + x3*d_x2 + x4*d_x3", "d_x3", "x5*d_x2", "d_x2", "(1+x6)*d_x2"})
        .constants({{1, 2, 3, 1},
                    {1, 8, 7, 1},
                    {2, 4, 5, 1},
                    {2, 6, 8, 1},
                    {3, 6, 7, 1},
                    {2, 3, 4, -1},
                    {2, 5, 6, -1},
                    {4, 5, 7, -1}},
                   "Table 1, class 7, structure constants")
        .candidates(everywhere(), {"S1", "S2", "S3", "S4"}, class7_candidates(),
                    "Table 1, class 7, symmetries S1-S4")
        .verdict(4, "four-contact-on-dense-subset")
        .goursat()
        .points({"0,0,0,0,0,-1", "1,1/2,-1,2,3,0"})
        .build();
}

CatalogEntry build_class8() {
    return EntryBuilder("class8", "Goursat class 8 on R^6", "x1 x2 x3 x4 x5 x6")
        .gens({"d_x6", "d_x5 + x6*(d_x4 + x5*(x4*d_x3 + x3*d_x2 + d_x1))"})
        .basis({"d_x6", "d_x5 + x6*(d_x4 + x5*(x4*d_x3 + x3*d_x2 + d_x1))",
                "x5*(d_x1 + x3*d_x2 + x4*d_x3) + d_x4", "d_x1 + x3*d_x2 + x4*d_x3", "x6*d_x3",
                "d_x3", "x5*x6^2*d_x2", "x5*x6*d_x2", "x5*d_x2", "d_x2", "x6^2*d_x2",
                "x6*d_x2"})
        .constants({{1, 2, 3, 1},
                    {1, 5, 6, 1},
                    {1, 8, 9, 1},
                    {1, 12, 10, 1},
                    {2, 3, 4, 1},
                    {2, 4, 5, 1},
                    {2, 7, 11, 1},
                    {2, 8, 12, 1},
                    {2, 9, 10, 1},
                    {3, 4, 6, 1},
                    {2, 5, 7, -1},
                    {2, 6, 8, -1},
                    {3, 5, 8, -1},
                    {3, 6, 9, -1},
                    {4, 5, 12, -1},
                    {4, 6, 10, -1},
                    {1, 7, 8, 2},
                    {1, 11, 12, 2}},
                   "Table 1, class 8, structure constants")
        .candidates(everywhere(), {"S1", "S2", "S3", "S4"}, class8_candidates(),
                    "Table 1, class 8, symmetries S1-S4")
        .verdict(4, "four-contact-on-dense-subset")
        .goursat()
        .points({"1,1,1,1,0,2", "1,2,3,4,5,0"})
        .build();
}

CatalogEntry build_zero_trailer() {
    return EntryBuilder("zero_trailer", "zero-trailer system on R^2 x S^1",
                        "xi1 xi2 theta0:angle")
        .gens({"d_theta0", "cos(theta0)*d_xi1 + sin(theta0)*d_xi2"})
        .basis({"d_theta0", "cos(theta0)*d_xi1 + sin(theta0)*d_xi2",
                "-sin(theta0)*d_xi1 + cos(theta0)*d_xi2"})
        .constants({{1, 2, 3, 1}, {1, 3, 2, -1}}, "zero-trailer relations")
        .goursat()
        .build();
}

CatalogEntry build_one_trailer() {
    Distribution d = n_trailer(1);
    CatalogEntry e;
    e.name = "one_trailer";
    e.title = "one-trailer system on R^2 x (S^1)^2";
    e.chart = d.chart;
    e.generators = d.generators;
    for (const auto& g : d.generators) e.generator_exprs.push_back(g.str());
    e.goursat_expected = true;
    // A six-dimensional span is claimed but no basis is printed; closure
    // output is compared against the dimension only.
    e.expected_closure_dim = 6;
    e.closure_locus = "one-trailer six-dimensional span claim";
    return e;
}

CatalogEntry build_cartan_36() {
    return EntryBuilder("cartan_36", "(3,6) distribution on R^6", "x1 x2 x3 u1 u2 u3")
        .gens({"d_x3 - x2*d_u1", "d_x1 - x3*d_u2", "d_x2 - x1*d_u3"})
        .claim_bracket(0, 2, "d_u1", "[X1,X3] = d_u1", "(3,6) distribution, S1")
        .claim_bracket(1, 0, "d_u2", "[X2,X1] = d_u2", "(3,6) distribution, S2")
        .claim_bracket(2, 1, "d_u3", "[X3,X2] = d_u3", "(3,6) distribution, S3")
        .candidates(everywhere(), {"S1", "S2", "S3"}, {"d_u1", "d_u2", "d_u3"},
                    "(3,6) distribution, commuting symmetries")
        .verdict(3, "three-contact")
        .build();
}

CatalogEntry build_cartan_235() {
    ChartPtr chart = cartan_235_chart();
    Distribution d = cartan_235(parse_poly("q^2", chart));
    CatalogEntry e;
    e.name = "cartan_235";
    e.title = "(2,3,5) distribution on R^5 with F = q^2";
    e.chart = chart;
    e.generators = d.generators;
    for (const auto& g : d.generators) e.generator_exprs.push_back(g.str());
    CandidateSet set;
    // The listed triple spans a complement exactly where the d_p direction
    // survives in X2, i.e. off q = 0 (the spanning determinant is +-q).
    set.region = coord_ne(4, 0, "q != 0");
    set.names = {"S1", "S2", "S3"};
    set.fields = {parse_field("d_x", chart), parse_field("d_y", chart),
                  parse_field("d_z", chart)};
    set.paper_locus = "(2,3,5) distribution, commuting symmetries";
    e.candidates.push_back(std::move(set));
    e.expected_k = 3;
    e.expected_verdict = "three-contact";
    e.expected_flag_ranks = {2, 3, 5};
    return e;
}

CatalogEntry build_cartan_47qc() {
    return EntryBuilder("cartan_47qc", "flat qc (4,7) distribution on R^7",
                        "u1 u2 u3 x1 x2 x3 x4")
        .gens({"x2*d_u1 - x1*d_u2 + x3*d_u3 + d_x4", "x1*d_u1 - x2*d_u2 - d_x3",
               "x1*d_u3 + d_x2", "d_x1"})
        .candidates(everywhere(), {"S1", "S2", "S3"}, {"d_u1", "d_u2", "d_u3"},
                    "qc (4,7) distribution, commuting symmetries")
        .verdict(3, "three-contact")
        .build();
}

std::map<std::string, CatalogEntry> build_all() {
    std::map<std::string, CatalogEntry> m;
    for (auto&& e : {build_class1(), build_class2(), build_class3(), build_class4(),
                     build_class5(), build_class6(), build_class7(), build_class8(),
                     build_zero_trailer(), build_one_trailer(), build_cartan_36(),
                     build_cartan_235(), build_cartan_47qc()})
        m.emplace(e.name, std::move(e));
    return m;
}

const std::map<std::string, CatalogEntry>& entries() {
    static const std::map<std::string, CatalogEntry> m = build_all();
    return m;
}

}  // namespace

const std::vector<std::string>& list_entries() {
    static const std::vector<std::string> names = {
        "class1",       "class2",     "class3",    "class4",     "class5",
        "class6",       "class7",     "class8",    "zero_trailer", "one_trailer",
        "cartan_36",    "cartan_235", "cartan_47qc"};
    return names;
}

bool has_entry(const std::string& name) { return entries().count(name) > 0; }

const CatalogEntry& get_entry(const std::string& name) {
    auto it = entries().find(name);
    if (it == entries().end()) throw DomainError("unknown catalog entry: " + name);
    return it->second;
}

Distribution n_trailer(int n) {
    if (n < 0) throw DomainError("n_trailer needs n >= 0");
    std::string decl = "xi1 xi2";
    for (int i = 0; i <= n; ++i) decl += " theta" + std::to_string(i) + ":angle";
    ChartPtr chart = make_chart(decl);
    const std::size_t theta = 2;  // coordinate index of theta0

    auto sin_of = [&](int i) { return TrigPoly::sin_of(chart, theta + i); };
    auto cos_of = [&](int i) { return TrigPoly::cos_of(chart, theta + i); };
    // cos/sin of (theta_j - theta_{j-1}), expanded.
    auto cos_diff = [&](int j) {
        return cos_of(j) * cos_of(j - 1) + sin_of(j) * sin_of(j - 1);
    };
    auto sin_diff = [&](int j) {
        return sin_of(j) * cos_of(j - 1) - cos_of(j) * sin_of(j - 1);
    };
    // pi_i = prod_{j=i+1}^{n} cos(theta_j - theta_{j-1}), pi_n = 1.
    auto pi = [&](int i) {
        TrigPoly p = TrigPoly::constant(chart, Rat(1));
        for (int j = i + 1; j <= n; ++j) p = p * cos_diff(j);
        return p;
    };

    VectorField x1 = VectorField::basis(chart, theta + n);
    VectorField x2(chart);
    x2.set_component(0, pi(0) * cos_of(0));
    x2.set_component(1, pi(0) * sin_of(0));
    for (int i = 0; i + 1 <= n; ++i)
        x2.set_component(theta + i, pi(i + 1) * sin_diff(i + 1));
    return Distribution(chart, {std::move(x1), std::move(x2)});
}

ChartPtr cartan_235_chart() {
    static const ChartPtr chart = make_chart("x y z p q");
    return chart;
}

Distribution cartan_235(const TrigPoly& f) {
    ChartPtr chart = cartan_235_chart();
    require_same_chart(chart, f.chart(), "cartan_235");
    for (std::size_t c = 0; c < 4; ++c)  // x, y, z, p
        if (!f.derivative(c).is_zero())
            throw DomainError("F must depend only on q");
    if (f.derivative(4).derivative(4).is_zero())
        throw DomainError("F violates the condition d^2F/dq^2 != 0");
    VectorField x1 = VectorField::basis(chart, 4);
    VectorField x2(chart);
    x2.set_component(0, TrigPoly::constant(chart, Rat(1)));
    x2.set_component(1, TrigPoly::coordinate(chart, 3));  // p
    x2.set_component(2, f);
    x2.set_component(3, TrigPoly::coordinate(chart, 4));  // q
    return Distribution(chart, {std::move(x1), std::move(x2)});
}

}  // namespace kontact
