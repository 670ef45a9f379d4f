#include "distrib/flag.hpp"

#include "symcore/errors.hpp"

namespace kontact {

Distribution::Distribution(ChartPtr c, std::vector<VectorField> gens)
    : chart(std::move(c)), generators(std::move(gens)) {
    if (generators.empty()) throw DomainError("distribution needs at least one generator");
    for (const auto& g : generators)
        require_same_chart(chart, g.chart(), "distribution generators");
}

std::vector<int> DerivedFlag::ranks() const {
    std::vector<int> r;
    r.reserve(levels.size());
    for (const auto& l : levels) r.push_back(l.rank);
    return r;
}

DerivedFlag derived_flag(const Distribution& d, int max_depth,
                         std::span<const Point> probes) {
    if (max_depth < 0) throw DomainError("max_depth must be >= 0");
    const int dim = static_cast<int>(d.chart->dim());
    DerivedFlag flag;

    auto probe_ranks = [&](const std::vector<VectorField>& fields) {
        std::vector<int> r;
        r.reserve(probes.size());
        for (const auto& p : probes) r.push_back(rank_at(fields, p));
        return r;
    };
    auto saturated = [&](int rank, const std::vector<int>& pr) {
        if (rank < dim) return false;
        for (int r : pr)
            if (r < dim) return false;
        return true;
    };

    FlagLevel level0;
    level0.generators = d.generators;
    level0.basis = greedy_spanning_subset(d.generators, probes);
    level0.rank = generic_rank(level0.basis);
    flag.levels.push_back(level0);
    std::vector<int> prev_probe = probe_ranks(flag.levels.back().basis);

    for (int depth = 0; depth < max_depth; ++depth) {
        const FlagLevel& prev = flag.levels.back();
        if (saturated(prev.rank, prev_probe)) break;
        FlagLevel next;
        next.generators = prev.basis;
        std::vector<VectorField> candidates = prev.basis;
        for (std::size_t i = 0; i < prev.basis.size(); ++i) {
            for (std::size_t j = i + 1; j < prev.basis.size(); ++j) {
                VectorField b = lie_bracket(prev.basis[i], prev.basis[j]);
                if (b.is_zero()) continue;
                next.generators.push_back(b);
                candidates.push_back(std::move(b));
            }
        }
        next.basis = greedy_spanning_subset(candidates, probes);
        next.rank = generic_rank(next.basis);
        std::vector<int> next_probe = probe_ranks(next.basis);
        bool grown = next.rank > prev.rank;
        for (std::size_t p = 0; p < next_probe.size() && !grown; ++p)
            grown = next_probe[p] > prev_probe[p];
        flag.levels.push_back(std::move(next));
        prev_probe = std::move(next_probe);
        if (!grown) {
            flag.stabilized = true;
            break;
        }
    }
    if (!flag.levels.empty() && saturated(flag.levels.back().rank, prev_probe))
        flag.stabilized = true;
    return flag;
}

GoursatVerdict is_goursat(const Distribution& d, std::span<const Point> sample_points) {
    if (d.generators.size() != 2)
        throw DomainError("Goursat test expects exactly two generators");
    const int dim = static_cast<int>(d.chart->dim());
    DerivedFlag flag = derived_flag(d, dim, sample_points);

    GoursatVerdict v;
    v.ranks = flag.ranks();
    v.pass = true;
    for (std::size_t l = 0; l < v.ranks.size(); ++l) {
        if (v.ranks[l] != static_cast<int>(l) + 2) {
            v.pass = false;
            v.detail = "generic rank at level " + std::to_string(l) + " is " +
                       std::to_string(v.ranks[l]) + ", expected " + std::to_string(l + 2);
            break;
        }
    }
    if (v.pass && v.ranks.back() != dim) {
        v.pass = false;
        v.detail = "flag stabilized at rank " + std::to_string(v.ranks.back()) +
                   " below dimension " + std::to_string(dim);
    }

    for (const auto& p : sample_points) {
        PointRank pr{p, {}};
        for (const auto& level : flag.levels)
            pr.ranks.push_back(rank_at(level.generators, p));
        for (std::size_t l = 0; l < pr.ranks.size(); ++l) {
            if (v.pass && pr.ranks[l] != static_cast<int>(l) + 2) {
                v.pass = false;
                v.detail = "rank at level " + std::to_string(l) + " drops to " +
                           std::to_string(pr.ranks[l]) + " at " + p.str();
            }
        }
        v.point_checks.push_back(std::move(pr));
    }
    return v;
}

std::vector<VectorField> ad_distribution(const VectorField& x1, const VectorField& x2, int k) {
    require_same_chart(x1.chart(), x2.chart(), "ad distribution");
    if (k < 1) throw DomainError("ad distribution needs k >= 1");
    std::vector<VectorField> out{x1, x2};
    VectorField cur = x1;
    for (int j = 0; j < k; ++j) {
        cur = lie_bracket(x2, cur);
        out.push_back(cur);
    }
    return out;
}

}  // namespace kontact
