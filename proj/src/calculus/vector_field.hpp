#pragma once

#include <span>
#include <string>
#include <vector>

#include "symcore/point.hpp"
#include "symcore/trigpoly.hpp"

namespace kontact {

/// Vector field with one TrigPoly component per chart coordinate.
class VectorField {
public:
    explicit VectorField(ChartPtr chart);
    VectorField(ChartPtr chart, std::vector<TrigPoly> components);

    static VectorField zero(ChartPtr chart) { return VectorField(std::move(chart)); }
    /// The constant coordinate field d_<coord>.
    static VectorField basis(ChartPtr chart, std::size_t coord_index);

    const ChartPtr& chart() const { return chart_; }
    std::size_t dim() const { return comps_.size(); }
    const TrigPoly& component(std::size_t i) const { return comps_[i]; }
    void set_component(std::size_t i, TrigPoly p);

    bool is_zero() const;

    VectorField operator-() const;
    VectorField operator+(const VectorField& o) const;
    VectorField operator-(const VectorField& o) const;
    VectorField operator*(const TrigPoly& f) const;
    VectorField operator*(const Rat& c) const;

    bool operator==(const VectorField& o) const;
    bool operator!=(const VectorField& o) const { return !(*this == o); }

    /// Directional derivative X(f) = sum_i X^i d_i f.
    TrigPoly apply(const TrigPoly& f) const;

    std::vector<Rat> evaluate(const Point& p) const;
    /// Float-mode evaluation at a raw state vector (angles in radians).
    std::vector<double> evaluate_state(const std::vector<double>& state) const;

    std::string str() const;

private:
    ChartPtr chart_;
    std::vector<TrigPoly> comps_;
};

/// [X, Y]^i = X(Y^i) - Y(X^i).
VectorField lie_bracket(const VectorField& x, const VectorField& y);

/// Raw angles -> per-symbol values (sin/cos expanded) for float evaluation.
std::vector<double> state_to_symbols(const Chart& chart, const std::vector<double>& state);

}  // namespace kontact
