#include "distrib/kcontact.hpp"

#include "symcore/errors.hpp"

namespace kontact {

bool Locus::dense_complement() const {
    if (minors.empty()) return true;
    for (const auto& m : minors)
        if (!m.is_zero()) return true;
    return false;
}

bool Locus::contains(const Point& p) const {
    if (minors.empty()) return false;
    for (const auto& m : minors)
        if (!m.evaluate(p).is_zero()) return false;
    return true;
}

Locus spanning_locus(std::span<const VectorField> fields) {
    if (fields.empty()) throw DomainError("spanning locus of an empty list");
    ChartPtr chart = fields[0].chart();
    const std::size_t n = chart->dim();
    if (fields.size() != n)
        throw DomainError("spanning locus expects exactly dimension-many fields, got " +
                          std::to_string(fields.size()));
    std::vector<std::vector<TrigPoly>> m;
    for (const auto& f : fields) {
        require_same_chart(chart, f.chart(), "spanning locus");
        std::vector<TrigPoly> row;
        for (std::size_t j = 0; j < n; ++j) row.push_back(f.component(j));
        m.push_back(std::move(row));
    }
    TrigPoly det = trig_determinant(m, chart);
    Locus locus;
    if (det.is_zero()) {
        locus.minors.push_back(det);
        locus.description = "degenerate everywhere (determinant identically zero)";
    } else if (det.is_constant()) {
        locus.description = "degenerate nowhere (determinant " + det.str() + ")";
    } else {
        locus.minors.push_back(det);
        locus.description = "degenerate on the zero set of " + det.str();
    }
    return locus;
}

SymmetryVerdict is_lie_symmetry(const VectorField& y, const Distribution& d) {
    require_same_chart(y.chart(), d.chart, "Lie symmetry test");
    SymmetryVerdict v;
    for (std::size_t i = 0; i < d.generators.size(); ++i) {
        VectorField b = lie_bracket(y, d.generators[i]);
        if (!is_member(b, d.generators)) {
            v.pass = false;
            v.offending = "[Y, g" + std::to_string(i + 1) + "] = " + b.str() +
                          " is not in the span of the generators";
            return v;
        }
    }
    return v;
}

SymmetryVerdict schouten_symmetry_check(const VectorField& y, const Distribution& d) {
    if (d.generators.size() != 2)
        throw DomainError("Schouten symmetry check expects two generators");
    MultiVector b = wedge_vectors(d.generators);
    if (b.is_zero()) throw DomainError("Schouten symmetry check: X1^X2 is identically zero");
    MultiVector lyb = schouten_vf_multivector(y, b);
    SymmetryVerdict v;
    // Proportionality: all 2x2 cross-determinants of the two component
    // vectors vanish identically.
    for (const auto& [ti, ci] : lyb.components()) {
        for (const auto& [tj, cj] : b.components()) {
            TrigPoly cross = ci * cj - lyb.get(tj) * b.get(ti);
            if (!cross.is_zero()) {
                v.pass = false;
                v.offending = "[Y, X1^X2] is not proportional to X1^X2 (witness minor on " +
                              std::to_string(ti[0]) + std::to_string(ti[1]) + "," +
                              std::to_string(tj[0]) + std::to_string(tj[1]) + ")";
                return v;
            }
        }
    }
    return v;
}

namespace {

/// Reduced row echelon data for quotient computations at a point.
struct Echelon {
    std::vector<std::vector<Rat>> rows;  // rref of the distribution at p
    std::vector<std::size_t> pivot_cols;
    std::vector<std::size_t> free_cols;

    /// Coordinates of v modulo the row space, on the free columns.
    std::vector<Rat> reduce(std::vector<Rat> v) const {
        for (std::size_t r = 0; r < rows.size(); ++r) {
            Rat f = v[pivot_cols[r]];
            if (f.is_zero()) continue;
            for (std::size_t c = 0; c < v.size(); ++c) v[c] -= f * rows[r][c];
        }
        std::vector<Rat> q;
        q.reserve(free_cols.size());
        for (auto c : free_cols) q.push_back(v[c]);
        return q;
    }
};

std::optional<Echelon> echelonize(std::vector<std::vector<Rat>> m) {
    if (m.empty()) return std::nullopt;
    const std::size_t ncols = m[0].size();
    Echelon e;
    std::size_t row = 0;
    for (std::size_t col = 0; col < ncols && row < m.size(); ++col) {
        std::size_t pivot = row;
        while (pivot < m.size() && m[pivot][col].is_zero()) ++pivot;
        if (pivot == m.size()) continue;
        std::swap(m[pivot], m[row]);
        Rat inv = Rat(1) / m[row][col];
        for (std::size_t c = 0; c < ncols; ++c) m[row][c] *= inv;
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r == row || m[r][col].is_zero()) continue;
            Rat f = m[r][col];
            for (std::size_t c = 0; c < ncols; ++c) m[r][c] -= f * m[row][c];
        }
        e.pivot_cols.push_back(col);
        ++row;
    }
    for (std::size_t c = 0; c < ncols; ++c)
        if (std::find(e.pivot_cols.begin(), e.pivot_cols.end(), c) == e.pivot_cols.end())
            e.free_cols.push_back(c);
    m.resize(row);
    e.rows = std::move(m);
    return e;
}

}  // namespace

NonIntegrability max_nonintegrable(const Distribution& d, std::span<const Point> pts) {
    const int r = generic_rank(d.generators);
    NonIntegrability out;
    bool any_pass = false, any_fail = false;

    // Brackets of generator pairs, computed once symbolically.
    const std::size_t ng = d.generators.size();
    std::vector<std::vector<VectorField>> brackets(ng);
    for (std::size_t i = 0; i < ng; ++i)
        for (std::size_t j = i + 1; j < ng; ++j)
            brackets[i].push_back(lie_bracket(d.generators[i], d.generators[j]));

    for (const auto& p : pts) {
        std::vector<std::vector<Rat>> g;
        for (const auto& f : d.generators) g.push_back(f.evaluate(p));
        if (rational_rank(g) != r) {
            out.points.push_back({p, PointStatus::RankDeficient});
            continue;
        }
        // Pointwise basis of D_p: greedy independent generator rows.
        std::vector<std::size_t> basis_idx;
        std::vector<std::vector<Rat>> basis_rows;
        for (std::size_t i = 0; i < ng && static_cast<int>(basis_idx.size()) < r; ++i) {
            std::vector<std::vector<Rat>> trial = basis_rows;
            trial.push_back(g[i]);
            if (rational_rank(trial) > static_cast<int>(basis_rows.size())) {
                basis_idx.push_back(i);
                basis_rows.push_back(g[i]);
            }
        }
        auto ech = echelonize(basis_rows);
        // rho matrix: rows indexed by basis field i, columns by (j, quotient
        // coordinate); trivial kernel iff rank r.
        std::vector<std::vector<Rat>> rho(basis_idx.size());
        for (std::size_t a = 0; a < basis_idx.size(); ++a) {
            for (std::size_t b = 0; b < basis_idx.size(); ++b) {
                std::vector<Rat> q;
                if (a == b) {
                    q.assign(ech->free_cols.size(), Rat(0));
                } else {
                    std::size_t i = std::min(basis_idx[a], basis_idx[b]);
                    std::size_t j = std::max(basis_idx[a], basis_idx[b]);
                    const VectorField& br = brackets[i][j - i - 1];
                    q = ech->reduce(br.evaluate(p));
                    if (basis_idx[a] > basis_idx[b])
                        for (auto& v : q) v = -v;
                }
                rho[a].insert(rho[a].end(), q.begin(), q.end());
            }
        }
        bool pass = rational_rank(rho) == r;
        out.points.push_back({p, pass ? PointStatus::Pass : PointStatus::Fail});
        (pass ? any_pass : any_fail) = true;
    }
    out.generic_pass = any_pass && !any_fail;
    return out;
}

KContactReport kcontact_verify(const Distribution& d, std::span<const VectorField> s,
                               std::span<const Point> pts) {
    const int r = generic_rank(d.generators);
    const std::size_t dim = d.chart->dim();
    if (s.size() + static_cast<std::size_t>(r) != dim)
        throw DomainError("candidate count " + std::to_string(s.size()) +
                          " plus distribution rank " + std::to_string(r) +
                          " must equal dimension " + std::to_string(dim));

    KContactReport rep;
    rep.k = static_cast<int>(s.size());

    bool symbolic_ok = true;
    for (const auto& y : s) {
        rep.symmetry_checks.push_back(is_lie_symmetry(y, d));
        symbolic_ok = symbolic_ok && rep.symmetry_checks.back().pass;
    }
    for (std::size_t i = 0; i < s.size(); ++i) {
        for (std::size_t j = i + 1; j < s.size(); ++j) {
            VectorField b = lie_bracket(s[i], s[j]);
            PairCommutation pc{i, j, b.is_zero(), b.is_zero() ? "" : b.str()};
            symbolic_ok = symbolic_ok && pc.commute;
            rep.commutation_checks.push_back(std::move(pc));
        }
    }

    std::vector<VectorField> all(s.begin(), s.end());
    for (const auto& g : d.generators) all.push_back(g);
    // With redundant generators the span check uses a generic basis of D.
    if (all.size() != dim) {
        std::vector<VectorField> basis = greedy_spanning_subset(d.generators);
        all.assign(s.begin(), s.end());
        for (auto& g : basis) all.push_back(std::move(g));
    }
    rep.spanning = spanning_locus(all);

    rep.nonintegrability = max_nonintegrable(d, pts);

    if (symbolic_ok && rep.nonintegrability.generic_pass && rep.spanning.empty_degenerate())
        rep.overall = "pass";
    else if (symbolic_ok && rep.nonintegrability.generic_pass && rep.spanning.dense_complement())
        rep.overall = "pass-on-dense-subset";
    else
        rep.overall = "fail";
    return rep;
}

}  // namespace kontact
