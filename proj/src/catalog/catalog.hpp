#pragma once

#include <optional>
#include <string>
#include <vector>

#include "liealg/liealg.hpp"

namespace kontact {

/// Restriction of a claim to a coordinate region: everywhere, or the
/// set where one linear coordinate equals / differs from a pinned value.
struct Region {
    enum class Kind { Everywhere, CoordEquals, CoordDiffers };
    Kind kind = Kind::Everywhere;
    std::size_t coord = 0;
    Rat value{0};
    std::string description;

    /// Moves a sample point into the region (pins the coordinate, or bumps it
    /// off the excluded value).
    Point adjust(const Point& p) const;
};

/// One set of claimed commuting Lie symmetries, valid on a region.
struct CandidateSet {
    Region region;
    std::vector<std::string> names;
    std::vector<VectorField> fields;
    std::string paper_locus;
};

/// A claimed bracket identity [gen_i, gen_j] = expected.
struct BracketClaim {
    std::size_t i, j;
    VectorField expected;
    std::string label;
    std::string paper_locus;
};

struct CatalogEntry {
    std::string name;
    std::string title;
    ChartPtr chart;
    std::vector<VectorField> generators;
    std::vector<std::string> generator_exprs;  // canonical sources, for reports
    std::vector<VectorField> vg_basis;
    std::optional<StructureConstants> expected_constants;
    std::string constants_locus;
    std::vector<CandidateSet> candidates;
    std::optional<int> expected_k;
    /// "two-contact" | "three-contact" | "four-contact" |
    /// "four-contact-on-dense-subset" | "not-k-contact" | ""
    std::string expected_verdict;
    std::vector<BracketClaim> bracket_claims;
    bool goursat_expected = false;
    /// Claimed derived-flag rank sequence when the distribution is not
    /// Goursat-shaped (e.g. (2,3,5)).
    std::vector<int> expected_flag_ranks;
    bool run_obstruction = false;
    /// Classes 7 and 8: cross-check the candidate fields against the
    /// generating-function family that the proof derives them from.
    bool check_generating_family = false;
    std::optional<int> expected_closure_dim;
    std::string closure_locus;
    /// Entry-specific sample points on the special loci named by the claims.
    std::vector<Point> special_points;
};

const std::vector<std::string>& list_entries();
bool has_entry(const std::string& name);
const CatalogEntry& get_entry(const std::string& name);

/// The n-trailer distribution on (xi1, xi2, theta0..thetan), with the angle
/// differences expanded into the trig-polynomial ring.
Distribution n_trailer(int n);

/// The generic rank-2 distribution <d_q, d_x + p d_y + q d_p + F(q) d_z> on
/// (x,y,z,p,q); F must depend only on q with a second q-derivative that is
/// not identically zero.
Distribution cartan_235(const TrigPoly& f);

ChartPtr cartan_235_chart();

}  // namespace kontact
