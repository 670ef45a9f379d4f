#include "symcore/trigpoly.hpp"

#include <algorithm>
#include <cmath>

#include "symcore/errors.hpp"
#include "symcore/point.hpp"

namespace kontact {

std::uint64_t Monomial::degree() const {
    std::uint64_t d = 0;
    for (auto e : exps) d += e;
    return d;
}

bool Monomial::is_constant() const {
    return std::all_of(exps.begin(), exps.end(), [](std::uint32_t e) { return e == 0; });
}

bool TermOrder::operator()(const Monomial& a, const Monomial& b) const {
    auto da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    // Lexicographic with earlier symbols weighing more: a < b when the first
    // differing slot has a smaller exponent in a.
    return std::lexicographical_compare(a.exps.begin(), a.exps.end(),
                                        b.exps.begin(), b.exps.end());
}

TrigPoly TrigPoly::constant(ChartPtr chart, const Rat& c) {
    TrigPoly p(std::move(chart));
    p.add_term(Monomial{std::vector<std::uint32_t>(p.chart_->symbol_count(), 0)}, c);
    return p;
}

TrigPoly TrigPoly::coordinate(ChartPtr chart, std::size_t coord_index) {
    TrigPoly p(std::move(chart));
    const Chart& ch = *p.chart_;
    if (coord_index >= ch.dim()) throw DomainError("coordinate index out of range");
    if (ch.coord(coord_index).kind == CoordKind::Angular)
        throw DomainError("angular coordinate '" + ch.coord(coord_index).name +
                          "' has no polynomial value; use sin()/cos()");
    Monomial m{std::vector<std::uint32_t>(ch.symbol_count(), 0)};
    m.exps[ch.symbol_base(coord_index)] = 1;
    p.add_term(std::move(m), Rat(1));
    return p;
}

static TrigPoly angular_symbol(ChartPtr chart, std::size_t coord_index, bool cosine) {
    TrigPoly p(chart);
    const Chart& ch = *chart;
    if (coord_index >= ch.dim()) throw DomainError("coordinate index out of range");
    if (ch.coord(coord_index).kind != CoordKind::Angular)
        throw DomainError("sin/cos applied to linear coordinate '" +
                          ch.coord(coord_index).name + "'");
    Monomial m{std::vector<std::uint32_t>(ch.symbol_count(), 0)};
    m.exps[ch.symbol_base(coord_index) + (cosine ? 1 : 0)] = 1;
    p.add_term(std::move(m), Rat(1));
    return p;
}

TrigPoly TrigPoly::sin_of(ChartPtr chart, std::size_t coord_index) {
    return angular_symbol(std::move(chart), coord_index, false);
}

TrigPoly TrigPoly::cos_of(ChartPtr chart, std::size_t coord_index) {
    return angular_symbol(std::move(chart), coord_index, true);
}

bool TrigPoly::is_constant() const {
    if (terms_.empty()) return true;
    return terms_.size() == 1 && terms_.begin()->first.is_constant();
}

bool TrigPoly::is_one() const {
    return is_constant() && !terms_.empty() && terms_.begin()->second.is_one();
}

Rat TrigPoly::constant_value() const {
    for (const auto& [m, c] : terms_)
        if (m.is_constant()) return c;
    return Rat(0);
}

void TrigPoly::add_term(Monomial m, Rat c) {
    if (c.is_zero()) return;
    // Reduce the first over-weight sin slot; each split strictly lowers that
    // exponent, so recursion terminates.
    for (std::size_t ci = 0; ci < chart_->dim(); ++ci) {
        if (chart_->coord(ci).kind != CoordKind::Angular) continue;
        std::size_t s = chart_->symbol_base(ci);
        if (m.exps[s] >= 2) {
            Monomial drop = m;
            drop.exps[s] -= 2;
            Monomial swapped = drop;
            swapped.exps[s + 1] += 2;
            add_term(std::move(drop), c);
            add_term(std::move(swapped), -c);
            return;
        }
    }
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(std::move(m), std::move(c));
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

TrigPoly TrigPoly::operator-() const {
    TrigPoly r(chart_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

TrigPoly TrigPoly::operator+(const TrigPoly& o) const {
    TrigPoly r = *this;
    r += o;
    return r;
}

TrigPoly TrigPoly::operator-(const TrigPoly& o) const {
    TrigPoly r = *this;
    r -= o;
    return r;
}

TrigPoly& TrigPoly::operator+=(const TrigPoly& o) {
    require_same_chart(chart_, o.chart_, "polynomial addition");
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

TrigPoly& TrigPoly::operator-=(const TrigPoly& o) {
    require_same_chart(chart_, o.chart_, "polynomial subtraction");
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

TrigPoly TrigPoly::operator*(const TrigPoly& o) const {
    require_same_chart(chart_, o.chart_, "polynomial multiplication");
    TrigPoly r(chart_);
    for (const auto& [ma, ca] : terms_) {
        for (const auto& [mb, cb] : o.terms_) {
            Monomial m = ma;
            for (std::size_t i = 0; i < m.exps.size(); ++i) m.exps[i] += mb.exps[i];
            r.add_term(std::move(m), ca * cb);
        }
    }
    return r;
}

TrigPoly TrigPoly::operator*(const Rat& c) const {
    TrigPoly r(chart_);
    if (c.is_zero()) return r;
    for (const auto& [m, v] : terms_) r.terms_.emplace(m, v * c);
    return r;
}

TrigPoly TrigPoly::pow(unsigned e) const {
    TrigPoly r = TrigPoly::constant(chart_, Rat(1));
    TrigPoly base = *this;
    while (e) {
        if (e & 1u) r = r * base;
        if (e >>= 1u) base = base * base;
    }
    return r;
}

bool TrigPoly::operator==(const TrigPoly& o) const {
    if (!same_chart(chart_, o.chart_)) return false;
    return terms_ == o.terms_;
}

TrigPoly TrigPoly::derivative(std::size_t coord_index) const {
    if (coord_index >= chart_->dim()) throw DomainError("unknown coordinate index");
    TrigPoly r(chart_);
    const bool angular = chart_->coord(coord_index).kind == CoordKind::Angular;
    const std::size_t base = chart_->symbol_base(coord_index);
    for (const auto& [m, c] : terms_) {
        if (!angular) {
            auto e = m.exps[base];
            if (e == 0) continue;
            Monomial d = m;
            d.exps[base] -= 1;
            r.add_term(std::move(d), c * Rat(static_cast<long>(e)));
        } else {
            // d/dtheta (s^a c^b) = a s^(a-1) c^(b+1) - b s^(a+1) c^(b-1)
            auto a = m.exps[base], b = m.exps[base + 1];
            if (a > 0) {
                Monomial d = m;
                d.exps[base] -= 1;
                d.exps[base + 1] += 1;
                r.add_term(std::move(d), c * Rat(static_cast<long>(a)));
            }
            if (b > 0) {
                Monomial d = m;
                d.exps[base] += 1;
                d.exps[base + 1] -= 1;
                r.add_term(std::move(d), -(c * Rat(static_cast<long>(b))));
            }
        }
    }
    return r;
}

Rat TrigPoly::evaluate(const Point& p) const {
    require_same_chart(chart_, p.chart(), "evaluation");
    Rat total(0);
    for (const auto& [m, c] : terms_) {
        Rat v = c;
        for (std::size_t s = 0; s < m.exps.size(); ++s)
            if (m.exps[s]) v *= p.symbol_value(s).pow(m.exps[s]);
        total += v;
    }
    return total;
}

double TrigPoly::evaluate_symbols(const std::vector<double>& symbol_values) const {
    double total = 0.0;
    for (const auto& [m, c] : terms_) {
        double v = c.to_double();
        for (std::size_t s = 0; s < m.exps.size(); ++s)
            if (m.exps[s]) v *= std::pow(symbol_values[s], static_cast<int>(m.exps[s]));
        total += v;
    }
    return total;
}

std::uint64_t TrigPoly::degree() const {
    if (terms_.empty()) return 0;
    return terms_.rbegin()->first.degree();
}

Rat TrigPoly::content() const {
    Rat g(0);
    for (const auto& [m, c] : terms_) g = rat_gcd(g, c);
    return g;
}

Monomial TrigPoly::monomial_content() const {
    Monomial g;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (first) {
            g = m;
            first = false;
        } else {
            for (std::size_t i = 0; i < g.exps.size(); ++i)
                g.exps[i] = std::min(g.exps[i], m.exps[i]);
        }
        if (g.is_constant()) break;
    }
    if (first) g.exps.assign(chart_ ? chart_->symbol_count() : 0, 0);
    return g;
}

void TrigPoly::divide_content(const Rat& c, const Monomial& m) {
    if (c.is_zero()) throw DomainError("content division by zero");
    std::map<Monomial, Rat, TermOrder> out;
    for (const auto& [mono, coeff] : terms_) {
        Monomial d = mono;
        for (std::size_t i = 0; i < d.exps.size(); ++i) d.exps[i] -= m.exps[i];
        out.emplace(std::move(d), coeff / c);
    }
    terms_ = std::move(out);
}

static void append_factor(std::string& out, const std::string& name, std::uint32_t e) {
    if (e == 0) return;
    if (!out.empty()) out += '*';
    out += name;
    if (e > 1) out += '^' + std::to_string(e);
}

std::string TrigPoly::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    // Descending term order.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, c] = *it;
        const bool neg = c.sign() < 0;
        if (out.empty()) {
            if (neg) out += '-';
        } else {
            out += neg ? " - " : " + ";
        }
        Rat a = c.abs();
        std::string factors;
        for (std::size_t s = 0; s < m.exps.size(); ++s)
            append_factor(factors, chart_->symbol_name(s), m.exps[s]);
        if (factors.empty()) {
            out += a.str();
        } else {
            if (!a.is_one()) out += a.str() + '*';
            out += factors;
        }
    }
    return out;
}

}  // namespace kontact
