#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "distrib/rank.hpp"

namespace kontact {

struct Distribution {
    ChartPtr chart;
    std::vector<VectorField> generators;

    Distribution(ChartPtr c, std::vector<VectorField> gens);
};

struct FlagLevel {
    /// Basis of the previous level plus all pairwise brackets of it.
    std::vector<VectorField> generators;
    /// Generically spanning sublist used to build the next level.
    std::vector<VectorField> basis;
    int rank = 0;
};

struct DerivedFlag {
    std::vector<FlagLevel> levels;
    bool stabilized = false;

    std::vector<int> ranks() const;
};

/// Derived flag D^(0) = D, D^(l+1) = D^(l) + [D^(l), D^(l)], with generic
/// rank per level. Iteration stops early when the rank reaches the chart
/// dimension or stops growing. Probe points extend the per-level bases with
/// fields that only matter on special loci, keeping the recorded levels
/// pointwise-faithful at those points.
DerivedFlag derived_flag(const Distribution& d, int max_depth,
                         std::span<const Point> probes = {});

struct PointRank {
    Point point;
    std::vector<int> ranks;
};

struct GoursatVerdict {
    bool pass = false;
    std::vector<int> ranks;
    std::vector<PointRank> point_checks;
    std::string detail;
};

/// Pass iff the generic rank of flag level l is l+2 up to the chart
/// dimension; additionally verifies the rank sequence pointwise at the
/// supplied sample points.
GoursatVerdict is_goursat(const Distribution& d, std::span<const Point> sample_points);

/// {X1, X2, ad_{X2}X1, ..., ad^k_{X2}X1} with ad^{j+1} = [X2, ad^j].
std::vector<VectorField> ad_distribution(const VectorField& x1, const VectorField& x2, int k);

}  // namespace kontact
