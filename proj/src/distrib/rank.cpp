#include "distrib/rank.hpp"

#include <algorithm>

#include "symcore/errors.hpp"

namespace kontact {
namespace {

/// Divides a row by the gcd of its rational coefficients and by the common
/// monomial factor. Row scaling by a nonzero function leaves the rank over
/// the fraction field unchanged; it only keeps elimination products small.
void normalize_row(std::vector<TrigPoly>& row) {
    Rat content(0);
    Monomial mono;
    bool have = false;
    for (const auto& e : row) {
        if (e.is_zero()) continue;
        content = rat_gcd(content, e.content());
        Monomial mc = e.monomial_content();
        if (!have) {
            mono = mc;
            have = true;
        } else {
            for (std::size_t i = 0; i < mono.exps.size(); ++i)
                mono.exps[i] = std::min(mono.exps[i], mc.exps[i]);
        }
    }
    if (!have || content.is_zero()) return;
    if (content.is_one() && mono.is_constant()) return;
    for (auto& e : row)
        if (!e.is_zero()) e.divide_content(content, mono);
}

/// Fraction-free Gaussian elimination over the trig ring (an integral
/// domain), so the pivot count equals the generic rank.
int symbolic_rank(std::vector<std::vector<TrigPoly>> m) {
    if (m.empty()) return 0;
    const std::size_t ncols = m[0].size();
    std::vector<bool> row_used(m.size(), false), col_used(ncols, false);
    int rank = 0;
    while (true) {
        std::size_t pr = m.size(), pc = ncols;
        std::size_t best_terms = 0;
        std::uint64_t best_deg = 0;
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (row_used[r]) continue;
            for (std::size_t c = 0; c < ncols; ++c) {
                if (col_used[c] || m[r][c].is_zero()) continue;
                std::size_t nt = m[r][c].terms().size();
                std::uint64_t dg = m[r][c].degree();
                if (pr == m.size() || nt < best_terms ||
                    (nt == best_terms && dg < best_deg)) {
                    pr = r;
                    pc = c;
                    best_terms = nt;
                    best_deg = dg;
                }
            }
        }
        if (pr == m.size()) return rank;
        ++rank;
        row_used[pr] = true;
        col_used[pc] = true;
        const TrigPoly pivot = m[pr][pc];
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (row_used[r] || m[r][pc].is_zero()) continue;
            const TrigPoly factor = m[r][pc];
            for (std::size_t c = 0; c < ncols; ++c) {
                if (col_used[c] && c != pc) continue;
                m[r][c] = pivot * m[r][c] - factor * m[pr][c];
            }
            normalize_row(m[r]);
        }
    }
}

std::vector<std::vector<TrigPoly>> component_matrix(std::span<const VectorField> fields) {
    std::vector<std::vector<TrigPoly>> m;
    m.reserve(fields.size());
    for (const auto& f : fields) {
        if (!fields.empty()) require_same_chart(fields[0].chart(), f.chart(), "rank");
        std::vector<TrigPoly> row;
        row.reserve(f.dim());
        for (std::size_t j = 0; j < f.dim(); ++j) row.push_back(f.component(j));
        m.push_back(std::move(row));
    }
    return m;
}

}  // namespace

int generic_rank(std::span<const VectorField> fields) {
    if (fields.empty()) return 0;
    return symbolic_rank(component_matrix(fields));
}

int rational_rank(std::vector<std::vector<Rat>> m) {
    if (m.empty()) return 0;
    const std::size_t ncols = m[0].size();
    int rank = 0;
    std::size_t row = 0;
    for (std::size_t col = 0; col < ncols && row < m.size(); ++col) {
        std::size_t pivot = row;
        while (pivot < m.size() && m[pivot][col].is_zero()) ++pivot;
        if (pivot == m.size()) continue;
        std::swap(m[pivot], m[row]);
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r == row || m[r][col].is_zero()) continue;
            Rat f = m[r][col] / m[row][col];
            for (std::size_t c = col; c < ncols; ++c) m[r][c] -= f * m[row][c];
        }
        ++rank;
        ++row;
    }
    return rank;
}

int rank_at(std::span<const VectorField> fields, const Point& p) {
    std::vector<std::vector<Rat>> m;
    m.reserve(fields.size());
    for (const auto& f : fields) m.push_back(f.evaluate(p));
    return rational_rank(std::move(m));
}

bool is_member(const VectorField& x, std::span<const VectorField> generators) {
    if (generators.empty()) return x.is_zero();
    require_same_chart(x.chart(), generators[0].chart(), "membership");
    int r = generic_rank(generators);
    std::vector<VectorField> aug(generators.begin(), generators.end());
    aug.push_back(x);
    return generic_rank(aug) == r;
}

std::vector<VectorField> greedy_spanning_subset(std::span<const VectorField> candidates,
                                                std::span<const Point> probes) {
    std::vector<VectorField> kept;
    const std::size_t dim = candidates.empty() ? 0 : candidates[0].dim();
    int cur_rank = 0;
    std::vector<int> cur_probe(probes.size(), 0);
    for (const auto& f : candidates) {
        if (f.is_zero()) continue;
        std::vector<VectorField> trial = kept;
        trial.push_back(f);
        bool keep = false;
        int trial_rank = cur_rank;
        if (cur_rank < static_cast<int>(dim)) {
            trial_rank = generic_rank(trial);
            keep = trial_rank > cur_rank;
        }
        std::vector<int> trial_probe = cur_probe;
        if (!keep) {
            for (std::size_t p = 0; p < probes.size(); ++p) {
                if (cur_probe[p] >= static_cast<int>(dim)) continue;
                int r = rank_at(trial, probes[p]);
                if (r > cur_probe[p]) {
                    trial_probe[p] = r;
                    keep = true;
                }
            }
        }
        if (keep) {
            kept = std::move(trial);
            cur_rank = trial_rank > cur_rank ? trial_rank : generic_rank(kept);
            for (std::size_t p = 0; p < probes.size(); ++p)
                cur_probe[p] = rank_at(kept, probes[p]);
        }
    }
    return kept;
}

}  // namespace kontact
