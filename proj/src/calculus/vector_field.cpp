#include "calculus/vector_field.hpp"

#include <cmath>

#include "symcore/errors.hpp"

namespace kontact {

VectorField::VectorField(ChartPtr chart) : chart_(std::move(chart)) {
    comps_.assign(chart_->dim(), TrigPoly::zero(chart_));
}

VectorField::VectorField(ChartPtr chart, std::vector<TrigPoly> components)
    : chart_(std::move(chart)), comps_(std::move(components)) {
    if (comps_.size() != chart_->dim())
        throw DomainError("component count does not match chart dimension");
    for (const auto& c : comps_) require_same_chart(chart_, c.chart(), "vector field");
}

VectorField VectorField::basis(ChartPtr chart, std::size_t coord_index) {
    VectorField v(std::move(chart));
    if (coord_index >= v.dim()) throw DomainError("coordinate index out of range");
    v.comps_[coord_index] = TrigPoly::constant(v.chart_, Rat(1));
    return v;
}

void VectorField::set_component(std::size_t i, TrigPoly p) {
    require_same_chart(chart_, p.chart(), "vector field component");
    comps_[i] = std::move(p);
}

bool VectorField::is_zero() const {
    for (const auto& c : comps_)
        if (!c.is_zero()) return false;
    return true;
}

VectorField VectorField::operator-() const {
    VectorField r(chart_);
    for (std::size_t i = 0; i < comps_.size(); ++i) r.comps_[i] = -comps_[i];
    return r;
}

VectorField VectorField::operator+(const VectorField& o) const {
    require_same_chart(chart_, o.chart_, "vector field addition");
    VectorField r(chart_);
    for (std::size_t i = 0; i < comps_.size(); ++i) r.comps_[i] = comps_[i] + o.comps_[i];
    return r;
}

VectorField VectorField::operator-(const VectorField& o) const {
    return *this + (-o);
}

VectorField VectorField::operator*(const TrigPoly& f) const {
    VectorField r(chart_);
    for (std::size_t i = 0; i < comps_.size(); ++i) r.comps_[i] = comps_[i] * f;
    return r;
}

VectorField VectorField::operator*(const Rat& c) const {
    VectorField r(chart_);
    for (std::size_t i = 0; i < comps_.size(); ++i) r.comps_[i] = comps_[i] * c;
    return r;
}

bool VectorField::operator==(const VectorField& o) const {
    if (!same_chart(chart_, o.chart_)) return false;
    return comps_ == o.comps_;
}

TrigPoly VectorField::apply(const TrigPoly& f) const {
    require_same_chart(chart_, f.chart(), "directional derivative");
    TrigPoly r = TrigPoly::zero(chart_);
    for (std::size_t i = 0; i < comps_.size(); ++i) {
        if (comps_[i].is_zero()) continue;
        r += comps_[i] * f.derivative(i);
    }
    return r;
}

std::vector<Rat> VectorField::evaluate(const Point& p) const {
    require_same_chart(chart_, p.chart(), "field evaluation");
    std::vector<Rat> out;
    out.reserve(comps_.size());
    for (const auto& c : comps_) out.push_back(c.evaluate(p));
    return out;
}

std::vector<double> state_to_symbols(const Chart& chart, const std::vector<double>& state) {
    std::vector<double> sym(chart.symbol_count());
    for (std::size_t i = 0; i < chart.dim(); ++i) {
        std::size_t b = chart.symbol_base(i);
        if (chart.coord(i).kind == CoordKind::Angular) {
            sym[b] = std::sin(state[i]);
            sym[b + 1] = std::cos(state[i]);
        } else {
            sym[b] = state[i];
        }
    }
    return sym;
}

std::vector<double> VectorField::evaluate_state(const std::vector<double>& state) const {
    if (state.size() != chart_->dim()) throw DomainError("state dimension mismatch");
    auto sym = state_to_symbols(*chart_, state);
    std::vector<double> out(comps_.size());
    for (std::size_t i = 0; i < comps_.size(); ++i) out[i] = comps_[i].evaluate_symbols(sym);
    return out;
}

std::string VectorField::str() const {
    std::string out;
    for (std::size_t i = 0; i < comps_.size(); ++i) {
        const TrigPoly& c = comps_[i];
        if (c.is_zero()) continue;
        std::string piece;
        const std::string dname = "d_" + chart_->coord(i).name;
        if (c.is_one()) {
            piece = dname;
        } else if (c.is_constant() && (-c).is_one()) {
            piece = "-" + dname;
        } else if (c.terms().size() == 1) {
            piece = c.str() + "*" + dname;
        } else {
            piece = "(" + c.str() + ")*" + dname;
        }
        if (out.empty()) {
            out = piece;
        } else if (piece.front() == '-') {
            out += " - " + piece.substr(1);
        } else {
            out += " + " + piece;
        }
    }
    return out.empty() ? "0" : out;
}

VectorField lie_bracket(const VectorField& x, const VectorField& y) {
    require_same_chart(x.chart(), y.chart(), "Lie bracket");
    VectorField r(x.chart());
    for (std::size_t i = 0; i < x.dim(); ++i)
        r.set_component(i, x.apply(y.component(i)) - y.apply(x.component(i)));
    return r;
}

}  // namespace kontact
