#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "catalog/catalog.hpp"

namespace kontact {

/// One verified claim: `status` is "pass", "finding" (computation disagrees
/// with the published claim), "fail" (internal cross-check broke) or "info".
struct CheckRecord {
    std::string name;
    std::string computed;
    std::string expected;
    std::string status;
    std::string paper_locus;
    /// Optional machine-readable payload, as compact JSON text (e.g.
    /// structure-constant triples [i, j, k, "p/q"]).
    std::string data;
};

struct VerificationReport {
    std::string entry;
    std::vector<CheckRecord> checks;
    double wall_seconds = 0.0;

    bool has_findings() const;
    void add(CheckRecord r) { checks.push_back(std::move(r)); }
};

struct VerifyOptions {
    std::uint64_t seed = 12345;
};

/// Default sample batch for a chart: the origin, an all-ones point, and three
/// seeded pseudo-random rational points, followed by the entry's special
/// points.
std::vector<Point> sample_points(const ChartPtr& chart, std::uint64_t seed,
                                 const std::vector<Point>& special = {});

VerificationReport verify_entry(const std::string& name, const VerifyOptions& opts = {});

VerificationReport zero_trailer_contact_suite();

VerificationReport class6_obstruction_check();

}  // namespace kontact
