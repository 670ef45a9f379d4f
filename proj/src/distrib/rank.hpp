#pragma once

#include <span>
#include <vector>

#include "calculus/vector_field.hpp"

namespace kontact {

/// Largest r such that some r x r minor of the component matrix is not
/// identically zero, i.e. the rank over the fraction field of the trig ring.
int generic_rank(std::span<const VectorField> fields);

/// Rank of the exactly evaluated component matrix at a point.
int rank_at(std::span<const VectorField> fields, const Point& p);

/// Rank of a rational matrix (exact Gaussian elimination).
int rational_rank(std::vector<std::vector<Rat>> m);

/// True iff adjoining x does not raise the generic rank: every
/// (r+1) x (r+1) minor of the augmented matrix vanishes identically, which
/// certifies membership in the span wherever the generators attain rank r.
bool is_member(const VectorField& x, std::span<const VectorField> generators);

/// Greedy spanning sublist: scans `candidates` in order and keeps each field
/// that raises the generic rank of the kept list, or its pointwise rank at
/// one of the probe points. Without probes the kept list's size equals the
/// generic rank of the whole input; probes keep fields that only matter on
/// special loci (where a generically redundant field still adds directions).
std::vector<VectorField> greedy_spanning_subset(std::span<const VectorField> candidates,
                                                std::span<const Point> probes = {});

}  // namespace kontact
