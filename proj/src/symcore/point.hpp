#pragma once

#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "symcore/chart.hpp"
#include "symcore/rat.hpp"

namespace kontact {

/// Exact rational point of a chart: one value per linear coordinate and an
/// exact circle pair (s, c) with s^2 + c^2 = 1 per angular coordinate.
/// Values are stored per symbol slot, matching TrigPoly monomials.
class Point {
public:
    Point(ChartPtr chart, std::vector<Rat> symbol_values);

    /// Parses a tuple "1,0,3/5,4/5": linear coordinates take one rational,
    /// angular coordinates take the pair s,c in order.
    static Point parse(ChartPtr chart, std::string_view tuple);

    static Point zeros(ChartPtr chart);
    static Point ones(ChartPtr chart);

    /// Deterministic pseudo-random rational point; angular pairs come from the
    /// Pythagorean parametrization so the circle constraint is exact.
    static Point random(ChartPtr chart, std::mt19937_64& rng);

    const ChartPtr& chart() const { return chart_; }
    const Rat& symbol_value(std::size_t slot) const { return vals_[slot]; }

    /// Value of a linear coordinate (by coordinate index).
    const Rat& linear_value(std::size_t coord_index) const;

    Point with_linear(std::size_t coord_index, const Rat& v) const;

    std::string str() const;

private:
    ChartPtr chart_;
    std::vector<Rat> vals_;
};

}  // namespace kontact
