#include "symcore/point.hpp"

#include <sstream>

#include "symcore/errors.hpp"

namespace kontact {

Point::Point(ChartPtr chart, std::vector<Rat> symbol_values)
    : chart_(std::move(chart)), vals_(std::move(symbol_values)) {
    if (vals_.size() != chart_->symbol_count())
        throw DomainError("point has " + std::to_string(vals_.size()) +
                          " values, chart expects " + std::to_string(chart_->symbol_count()));
    for (std::size_t i = 0; i < chart_->dim(); ++i) {
        if (chart_->coord(i).kind != CoordKind::Angular) continue;
        std::size_t b = chart_->symbol_base(i);
        Rat s = vals_[b], c = vals_[b + 1];
        if (!(s * s + c * c).is_one())
            throw DomainError("angular coordinate '" + chart_->coord(i).name +
                              "': s^2 + c^2 != 1 for s=" + s.str() + ", c=" + c.str());
    }
}

Point Point::parse(ChartPtr chart, std::string_view tuple) {
    std::vector<Rat> vals;
    std::istringstream in{std::string(tuple)};
    std::string item;
    while (std::getline(in, item, ',')) {
        // trim spaces
        auto b = item.find_first_not_of(" \t");
        auto e = item.find_last_not_of(" \t");
        if (b == std::string::npos) throw DomainError("empty entry in point tuple");
        vals.push_back(Rat::parse(item.substr(b, e - b + 1)));
    }
    return Point(std::move(chart), std::move(vals));
}

Point Point::zeros(ChartPtr chart) {
    std::vector<Rat> vals;
    for (std::size_t i = 0; i < chart->dim(); ++i) {
        if (chart->coord(i).kind == CoordKind::Angular) {
            vals.push_back(Rat(0));
            vals.push_back(Rat(1));
        } else {
            vals.push_back(Rat(0));
        }
    }
    return Point(std::move(chart), std::move(vals));
}

Point Point::ones(ChartPtr chart) {
    std::vector<Rat> vals;
    for (std::size_t i = 0; i < chart->dim(); ++i) {
        if (chart->coord(i).kind == CoordKind::Angular) {
            vals.push_back(Rat(3, 5));
            vals.push_back(Rat(4, 5));
        } else {
            vals.push_back(Rat(1));
        }
    }
    return Point(std::move(chart), std::move(vals));
}

Point Point::random(ChartPtr chart, std::mt19937_64& rng) {
    std::uniform_int_distribution<long> num(-6, 6);
    std::uniform_int_distribution<long> den(1, 3);
    std::vector<Rat> vals;
    for (std::size_t i = 0; i < chart->dim(); ++i) {
        Rat t(num(rng), den(rng));
        if (chart->coord(i).kind == CoordKind::Angular) {
            // (s, c) = (2t, 1 - t^2) / (1 + t^2)
            Rat one(1);
            Rat d = one + t * t;
            vals.push_back(Rat(2) * t / d);
            vals.push_back((one - t * t) / d);
        } else {
            vals.push_back(t);
        }
    }
    return Point(std::move(chart), std::move(vals));
}

const Rat& Point::linear_value(std::size_t coord_index) const {
    if (coord_index >= chart_->dim() ||
        chart_->coord(coord_index).kind == CoordKind::Angular)
        throw DomainError("linear_value: not a linear coordinate");
    return vals_[chart_->symbol_base(coord_index)];
}

Point Point::with_linear(std::size_t coord_index, const Rat& v) const {
    if (coord_index >= chart_->dim() ||
        chart_->coord(coord_index).kind == CoordKind::Angular)
        throw DomainError("with_linear: not a linear coordinate");
    std::vector<Rat> vals = vals_;
    vals[chart_->symbol_base(coord_index)] = v;
    return Point(chart_, std::move(vals));
}

std::string Point::str() const {
    std::string out = "(";
    for (std::size_t s = 0; s < vals_.size(); ++s) {
        if (s) out += ',';
        out += vals_[s].str();
    }
    return out + ")";
}

}  // namespace kontact
