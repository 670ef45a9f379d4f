#include "liealg/liealg.hpp"

#include <algorithm>
#include <set>

#include "symcore/errors.hpp"

namespace kontact {

void StructureConstants::set(int i, int j, int k, const Rat& c) {
    if (i == j || i < 1 || j < 1 || k < 1 || i > dim_ || j > dim_ || k > dim_)
        throw DomainError("bad structure constant index");
    if (i > j) {
        set(j, i, k, -c);
        return;
    }
    if (c.is_zero())
        c_.erase({i, j, k});
    else
        c_[{i, j, k}] = c;
}

Rat StructureConstants::get(int i, int j, int k) const {
    if (i == j) return Rat(0);
    if (i > j) return -get(j, i, k);
    auto it = c_.find({i, j, k});
    return it == c_.end() ? Rat(0) : it->second;
}

bool StructureConstants::jacobi_holds() const {
    for (int i = 1; i <= dim_; ++i)
        for (int j = i + 1; j <= dim_; ++j)
            for (int k = j + 1; k <= dim_; ++k)
                for (int l = 1; l <= dim_; ++l) {
                    Rat sum(0);
                    for (int m = 1; m <= dim_; ++m) {
                        sum += get(i, j, m) * get(m, k, l);
                        sum += get(j, k, m) * get(m, i, l);
                        sum += get(k, i, m) * get(m, j, l);
                    }
                    if (!sum.is_zero()) return false;
                }
    return true;
}

std::string StructureConstants::str() const {
    if (c_.empty()) return "(abelian: all constants zero)";
    std::string out;
    for (const auto& [idx, c] : c_) {
        auto [i, j, k] = idx;
        if (!out.empty()) out += ", ";
        out += "c" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) +
               "=" + c.str();
    }
    return out;
}

std::optional<std::vector<Rat>> constant_decompose(const VectorField& x,
                                                   std::span<const VectorField> basis) {
    if (basis.empty()) {
        if (x.is_zero()) return std::vector<Rat>{};
        return std::nullopt;
    }
    const ChartPtr& chart = basis[0].chart();
    require_same_chart(x.chart(), chart, "constant decomposition");
    const std::size_t r = basis.size();

    // One linear equation per (coordinate, monomial) pair.
    std::vector<std::vector<Rat>> rows;
    for (std::size_t c = 0; c < chart->dim(); ++c) {
        std::set<Monomial, TermOrder> monos;
        for (const auto& b : basis)
            for (const auto& [m, v] : b.component(c).terms()) monos.insert(m);
        for (const auto& [m, v] : x.component(c).terms()) monos.insert(m);
        for (const auto& m : monos) {
            std::vector<Rat> row(r + 1, Rat(0));
            for (std::size_t i = 0; i < r; ++i) {
                auto it = basis[i].component(c).terms().find(m);
                if (it != basis[i].component(c).terms().end()) row[i] = it->second;
            }
            auto it = x.component(c).terms().find(m);
            if (it != x.component(c).terms().end()) row[r] = it->second;
            rows.push_back(std::move(row));
        }
    }

    // Reduced echelon on the coefficient columns; inconsistent rows mean no
    // constant combination exists.
    std::vector<int> pivot_of_col(r, -1);
    std::size_t row = 0;
    for (std::size_t col = 0; col < r && row < rows.size(); ++col) {
        std::size_t p = row;
        while (p < rows.size() && rows[p][col].is_zero()) ++p;
        if (p == rows.size()) continue;
        std::swap(rows[p], rows[row]);
        Rat inv = Rat(1) / rows[row][col];
        for (auto& v : rows[row]) v *= inv;
        for (std::size_t rr = 0; rr < rows.size(); ++rr) {
            if (rr == row || rows[rr][col].is_zero()) continue;
            Rat f = rows[rr][col];
            for (std::size_t cc = 0; cc <= r; ++cc) rows[rr][cc] -= f * rows[row][cc];
        }
        pivot_of_col[col] = static_cast<int>(row);
        ++row;
    }
    for (std::size_t rr = row; rr < rows.size(); ++rr)
        if (!rows[rr][r].is_zero()) return std::nullopt;

    std::vector<Rat> a(r, Rat(0));
    for (std::size_t col = 0; col < r; ++col)
        if (pivot_of_col[col] >= 0) a[col] = rows[pivot_of_col[col]][r];
    return a;
}

namespace {

/// Rational rescale only (span-preserving): clear denominators, reduce
/// content, make the leading coefficient of the highest nonzero component
/// positive.
VectorField normalize_basis_element(const VectorField& v) {
    Rat content(0);
    for (std::size_t i = 0; i < v.dim(); ++i)
        content = rat_gcd(content, v.component(i).content());
    if (content.is_zero()) return v;
    int lead_sign = 1;
    for (std::size_t i = v.dim(); i-- > 0;) {
        const auto& c = v.component(i);
        if (c.is_zero()) continue;
        lead_sign = c.terms().rbegin()->second.sign();
        break;
    }
    Rat scale = Rat(1) / content;
    if (lead_sign < 0) scale = -scale;
    return v * scale;
}

}  // namespace

ClosureResult bracket_closure(std::span<const VectorField> seed, int max_dim) {
    if (seed.empty()) throw DomainError("closure of an empty seed");
    if (max_dim < static_cast<int>(seed.size()))
        throw DomainError("max_dim is below the seed size");
    ClosureResult res;
    res.basis.assign(seed.begin(), seed.end());

    for (std::size_t j = 1; j < res.basis.size(); ++j) {
        for (std::size_t i = 0; i < j; ++i) {
            VectorField b = lie_bracket(res.basis[i], res.basis[j]);
            if (b.is_zero()) continue;
            if (constant_decompose(b, res.basis)) continue;
            if (static_cast<int>(res.basis.size()) >= max_dim) {
                res.status = ClosureResult::Status::NotClosedWithinBound;
                return res;
            }
            res.basis.push_back(normalize_basis_element(b));
        }
    }

    StructureConstants sc(static_cast<int>(res.basis.size()));
    for (std::size_t j = 1; j < res.basis.size(); ++j) {
        for (std::size_t i = 0; i < j; ++i) {
            auto a = constant_decompose(lie_bracket(res.basis[i], res.basis[j]), res.basis);
            for (std::size_t k = 0; k < a->size(); ++k)
                if (!(*a)[k].is_zero())
                    sc.set(static_cast<int>(i) + 1, static_cast<int>(j) + 1,
                           static_cast<int>(k) + 1, (*a)[k]);
        }
    }
    res.constants = std::move(sc);
    return res;
}

ConstantsCheck verify_structure_constants(std::span<const VectorField> basis,
                                          const StructureConstants& expected) {
    if (static_cast<int>(basis.size()) != expected.dimension())
        throw DomainError("basis size does not match expected dimension");
    ConstantsCheck check;
    const int r = expected.dimension();
    for (int j = 2; j <= r; ++j) {
        for (int i = 1; i < j; ++i) {
            ConstantsEntry e;
            e.i = i;
            e.j = j;
            auto a = constant_decompose(lie_bracket(basis[i - 1], basis[j - 1]), basis);
            e.decomposable = a.has_value();
            for (int k = 1; k <= r; ++k) e.expected.push_back(expected.get(i, j, k));
            if (a) {
                e.computed = *a;
                e.match = e.computed == e.expected;
            } else {
                e.match = false;
                check.is_vg_basis = false;
            }
            check.all_match = check.all_match && e.match;
            check.entries.push_back(std::move(e));
        }
    }
    return check;
}

AutomorphicVerdict is_locally_automorphic(std::span<const VectorField> basis) {
    AutomorphicVerdict v;
    if (basis.empty()) {
        v.detail = "empty basis";
        return v;
    }
    const std::size_t dim = basis[0].chart()->dim();
    if (basis.size() != dim) {
        v.detail = "basis size " + std::to_string(basis.size()) +
                   " differs from dimension " + std::to_string(dim);
        return v;
    }
    int r = generic_rank(basis);
    v.locus = spanning_locus(basis);
    if (r != static_cast<int>(dim)) {
        v.detail = "basis spans rank " + std::to_string(r) + " only";
        return v;
    }
    v.pass = true;
    v.detail = v.locus->description;
    return v;
}

}  // namespace kontact
