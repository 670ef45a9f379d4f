#include "liesys/liesys.hpp"

#include <cmath>
#include <ostream>
#include <sstream>

#include "symcore/errors.hpp"
#include "symcore/parser.hpp"

namespace kontact {

TDepCoefficients TDepCoefficients::parse(std::string_view spec) {
    static const ChartPtr tchart = make_chart("t");
    std::vector<std::vector<Rat>> polys;
    std::string item;
    std::istringstream in{std::string(spec)};
    while (std::getline(in, item, ';')) {
        TrigPoly p = parse_poly(item, tchart);
        std::vector<Rat> coeffs;
        for (const auto& [m, c] : p.terms()) {
            std::size_t deg = m.exps[0];
            if (coeffs.size() <= deg) coeffs.resize(deg + 1, Rat(0));
            coeffs[deg] = c;
        }
        polys.push_back(std::move(coeffs));
    }
    if (polys.empty()) throw DomainError("empty coefficient list");
    return TDepCoefficients(std::move(polys));
}

double TDepCoefficients::eval(std::size_t idx, double t) const {
    const auto& p = polys_[idx];
    double v = 0.0;
    for (std::size_t k = p.size(); k-- > 0;) v = v * t + p[k].to_double();
    return v;
}

std::string TDepCoefficients::str() const {
    static const ChartPtr tchart = make_chart("t");
    std::string out;
    for (std::size_t i = 0; i < polys_.size(); ++i) {
        TrigPoly p = TrigPoly::zero(tchart);
        for (std::size_t k = 0; k < polys_[i].size(); ++k) {
            Monomial m{{static_cast<std::uint32_t>(k)}};
            p.add_term(std::move(m), polys_[i][k]);
        }
        if (i) out += "; ";
        out += p.str();
    }
    return out;
}

void Trajectory::write_csv(std::ostream& out) const {
    out << "t";
    for (const auto& c : chart->coords()) out << "," << c.name;
    out << "\n";
    char buf[64];
    for (std::size_t i = 0; i < times.size(); ++i) {
        std::snprintf(buf, sizeof buf, "%.17g", times[i]);
        out << buf;
        for (double v : states[i]) {
            std::snprintf(buf, sizeof buf, "%.17g", v);
            out << "," << buf;
        }
        out << "\n";
    }
}

Trajectory integrate_rk4(std::span<const VectorField> basis, const TDepCoefficients& b,
                         const std::vector<double>& x0, double t0, double t1, double h) {
    if (basis.empty()) throw DomainError("empty basis");
    if (h <= 0) throw DomainError("step size must be positive");
    if (t1 < t0) throw DomainError("empty time span");
    if (b.size() != basis.size())
        throw DomainError("coefficient count does not match basis size");
    const ChartPtr& chart = basis[0].chart();
    if (x0.size() != chart->dim()) throw DomainError("initial state dimension mismatch");

    auto rhs = [&](double t, const std::vector<double>& x) {
        std::vector<double> v(x.size(), 0.0);
        auto sym = state_to_symbols(*chart, x);
        for (std::size_t a = 0; a < basis.size(); ++a) {
            double ba = b.eval(a, t);
            if (ba == 0.0) continue;
            for (std::size_t i = 0; i < v.size(); ++i)
                v[i] += ba * basis[a].component(i).evaluate_symbols(sym);
        }
        return v;
    };

    Trajectory traj;
    traj.chart = chart;
    traj.step = h;
    std::vector<double> x = x0;
    double t = t0;
    traj.times.push_back(t);
    traj.states.push_back(x);

    const auto nsteps = static_cast<std::size_t>(std::ceil((t1 - t0) / h - 1e-12));
    for (std::size_t step = 0; step < nsteps; ++step) {
        double hh = std::min(h, t1 - t);
        auto k1 = rhs(t, x);
        std::vector<double> tmp(x.size());
        for (std::size_t i = 0; i < x.size(); ++i) tmp[i] = x[i] + 0.5 * hh * k1[i];
        auto k2 = rhs(t + 0.5 * hh, tmp);
        for (std::size_t i = 0; i < x.size(); ++i) tmp[i] = x[i] + 0.5 * hh * k2[i];
        auto k3 = rhs(t + 0.5 * hh, tmp);
        for (std::size_t i = 0; i < x.size(); ++i) tmp[i] = x[i] + hh * k3[i];
        auto k4 = rhs(t + hh, tmp);
        for (std::size_t i = 0; i < x.size(); ++i) {
            x[i] += hh / 6.0 * (k1[i] + 2 * k2[i] + 2 * k3[i] + k4[i]);
            if (!std::isfinite(x[i]))
                throw DomainError("non-finite state during integration at t = " +
                                  std::to_string(t));
        }
        t += hh;
        traj.times.push_back(t);
        traj.states.push_back(x);
    }
    return traj;
}

ISO2Element ISO2Element::parse(std::string_view spec) {
    auto semi = spec.find(';');
    if (semi == std::string_view::npos)
        throw DomainError("group element needs 's,c;l1,l2'");
    auto split_pair = [](std::string_view part) {
        auto comma = part.find(',');
        if (comma == std::string_view::npos)
            throw DomainError("expected a comma-separated pair");
        return std::pair{Rat::parse(part.substr(0, comma)),
                         Rat::parse(part.substr(comma + 1))};
    };
    auto [s, c] = split_pair(spec.substr(0, semi));
    auto [l1, l2] = split_pair(spec.substr(semi + 1));
    if (!(s * s + c * c).is_one())
        throw DomainError("rotation pair is not on the unit circle: s=" + s.str() +
                          ", c=" + c.str());
    return ISO2Element{s, c, l1, l2};
}

ISO2Element ISO2Element::compose(const ISO2Element& o) const {
    ISO2Element r;
    r.s = s * o.c + c * o.s;  // angle addition
    r.c = c * o.c - s * o.s;
    r.l1 = l1 + c * o.l1 - s * o.l2;
    r.l2 = l2 + s * o.l1 + c * o.l2;
    return r;
}

double ISO2Element::angle() const { return std::atan2(s.to_double(), c.to_double()); }

std::vector<double> iso2_apply(const ISO2Element& g, const std::vector<double>& state) {
    if (state.size() != 3) throw DomainError("ISO(2) action expects a 3-component state");
    double cs = g.c.to_double(), sn = g.s.to_double();
    return {g.l1.to_double() + cs * state[0] - sn * state[1],
            g.l2.to_double() + sn * state[0] + cs * state[1], state[2] + g.angle()};
}

SuperposeReport check_superposition(std::span<const VectorField> basis,
                                    const TDepCoefficients& b, const ISO2Element& g,
                                    const std::vector<double>& x0, double t0, double t1,
                                    double h, double tol) {
    Trajectory particular = integrate_rk4(basis, b, x0, t0, t1, h);
    Trajectory transformed = integrate_rk4(basis, b, iso2_apply(g, x0), t0, t1, h);

    SuperposeReport rep;
    rep.tolerance = tol;
    rep.samples = particular.times.size();
    for (std::size_t i = 0; i < particular.times.size(); ++i) {
        std::vector<double> mapped = iso2_apply(g, particular.states[i]);
        for (std::size_t c = 0; c < mapped.size(); ++c)
            rep.discrepancy =
                std::max(rep.discrepancy, std::abs(mapped[c] - transformed.states[i][c]));
    }
    rep.pass = rep.discrepancy <= tol;
    return rep;
}

}  // namespace kontact
