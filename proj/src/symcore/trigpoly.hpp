#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "symcore/chart.hpp"
#include "symcore/rat.hpp"

namespace kontact {

class Point;

/// Exponent vector over a chart's symbols (one slot per linear coordinate,
/// sin/cos slots per angular coordinate). Normal form keeps every sin
/// exponent at most 1.
struct Monomial {
    std::vector<std::uint32_t> exps;

    std::uint64_t degree() const;
    bool is_constant() const;
    bool operator==(const Monomial&) const = default;
};

/// Graded lexicographic order over the chart's symbol order; total order,
/// used both for the canonical term map and for printing (descending).
struct TermOrder {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

/// Polynomial in the chart's linear coordinates and in sin/cos of its angular
/// coordinates, reduced by sin^2 -> 1 - cos^2. Zero coefficients are never
/// stored, so value equality is term-map equality.
class TrigPoly {
public:
    TrigPoly() = default;
    explicit TrigPoly(ChartPtr chart) : chart_(std::move(chart)) {}

    static TrigPoly zero(ChartPtr chart) { return TrigPoly(std::move(chart)); }
    static TrigPoly constant(ChartPtr chart, const Rat& c);
    static TrigPoly coordinate(ChartPtr chart, std::size_t coord_index);
    static TrigPoly sin_of(ChartPtr chart, std::size_t coord_index);
    static TrigPoly cos_of(ChartPtr chart, std::size_t coord_index);

    const ChartPtr& chart() const { return chart_; }
    const std::map<Monomial, Rat, TermOrder>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    bool is_one() const;
    /// Constant term value; whole value when is_constant().
    Rat constant_value() const;

    TrigPoly operator-() const;
    TrigPoly operator+(const TrigPoly& o) const;
    TrigPoly operator-(const TrigPoly& o) const;
    TrigPoly operator*(const TrigPoly& o) const;
    TrigPoly& operator+=(const TrigPoly& o);
    TrigPoly& operator-=(const TrigPoly& o);
    TrigPoly operator*(const Rat& c) const;
    TrigPoly pow(unsigned e) const;

    bool operator==(const TrigPoly& o) const;
    bool operator!=(const TrigPoly& o) const { return !(*this == o); }

    /// Exact partial derivative with respect to coordinate `coord_index`
    /// (d sin = cos dtheta, d cos = -sin dtheta for angular coordinates).
    TrigPoly derivative(std::size_t coord_index) const;

    Rat evaluate(const Point& p) const;
    /// Float-mode evaluation over per-symbol values (sin/cos already expanded).
    double evaluate_symbols(const std::vector<double>& symbol_values) const;

    /// Total degree of the leading (maximal) monomial; 0 for the zero poly.
    std::uint64_t degree() const;

    /// gcd of coefficients and the common monomial factor, for row scaling.
    Rat content() const;
    Monomial monomial_content() const;
    void divide_content(const Rat& c, const Monomial& m);

    /// Inserts c*m, rewriting any sin^k with k >= 2 into the normal form.
    void add_term(Monomial m, Rat c);

    std::string str() const;

private:
    ChartPtr chart_;
    std::map<Monomial, Rat, TermOrder> terms_;
};

inline TrigPoly operator*(const Rat& c, const TrigPoly& p) { return p * c; }

}  // namespace kontact
