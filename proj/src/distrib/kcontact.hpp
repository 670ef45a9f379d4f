#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "calculus/forms.hpp"
#include "distrib/flag.hpp"

namespace kontact {

/// Degeneracy certificate: the degenerate set is the common zero set of the
/// minors. An empty list means degenerate nowhere.
struct Locus {
    std::vector<TrigPoly> minors;
    std::string description;

    bool empty_degenerate() const { return minors.empty(); }
    /// Some minor is not identically zero (the certificate of a dense
    /// complement); trivially true when the list is empty.
    bool dense_complement() const;
    bool contains(const Point& p) const;
};

/// Determinant locus of a full set of fields (field count == dimension).
Locus spanning_locus(std::span<const VectorField> fields);

struct SymmetryVerdict {
    bool pass = true;
    /// "[Y, g2] = x5*d_x2" style description of the first failure.
    std::string offending;
};

/// Y is a Lie symmetry of D iff [Y, g] stays in the span of the generators
/// for every generator g.
SymmetryVerdict is_lie_symmetry(const VectorField& y, const Distribution& d);

/// Bivector route for rank-2 distributions: [Y, X1^X2] must be a functional
/// multiple of X1^X2 (all 2x2 cross-determinants of components vanish).
SymmetryVerdict schouten_symmetry_check(const VectorField& y, const Distribution& d);

enum class PointStatus { Pass, Fail, RankDeficient };

struct NonIntegrabilityPoint {
    Point point;
    PointStatus status;
};

struct NonIntegrability {
    std::vector<NonIntegrabilityPoint> points;
    /// All regular sampled points pass and at least one point passes.
    bool generic_pass = false;
};

/// Pointwise maximal non-integrability: at each point the quotient-valued
/// pairing rho(v, .) = pi([v, .]) on D_p must have trivial kernel.
NonIntegrability max_nonintegrable(const Distribution& d, std::span<const Point> pts);

struct PairCommutation {
    std::size_t i, j;
    bool commute;
    std::string bracket;  // printed when nonzero
};

struct KContactReport {
    int k = 0;
    std::vector<SymmetryVerdict> symmetry_checks;
    std::vector<PairCommutation> commutation_checks;
    Locus spanning;
    NonIntegrability nonintegrability;
    /// "pass", "pass-on-dense-subset" or "fail".
    std::string overall;
};

/// Definition check for a candidate list S of symmetries: each S_i a Lie
/// symmetry, pairwise commuting, S + generators spanning, and maximal
/// non-integrability at the sample points.
KContactReport kcontact_verify(const Distribution& d, std::span<const VectorField> s,
                               std::span<const Point> pts);

}  // namespace kontact
