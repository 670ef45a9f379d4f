#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "calculus/vector_field.hpp"

namespace kontact {

/// Per basis index, a polynomial in t with rational coefficients
/// (coefficient of t^k at position k).
class TDepCoefficients {
public:
    explicit TDepCoefficients(std::vector<std::vector<Rat>> polys) : polys_(std::move(polys)) {}

    /// Parses "1; t; 0" or "1 - t^2; 3/2*t; t^3" (one polynomial per basis
    /// element, separated by ';').
    static TDepCoefficients parse(std::string_view spec);

    std::size_t size() const { return polys_.size(); }
    double eval(std::size_t idx, double t) const;
    const std::vector<std::vector<Rat>>& polys() const { return polys_; }
    std::string str() const;

private:
    std::vector<std::vector<Rat>> polys_;
};

struct Trajectory {
    ChartPtr chart;
    double step = 0.0;
    std::vector<double> times;
    std::vector<std::vector<double>> states;

    /// CSV rows "t,coord1,..." with 17 significant digits.
    void write_csv(std::ostream& out) const;
};

/// Classical fourth-order Runge-Kutta for dx/dt = sum_a b_a(t) X_a(x).
/// Angular coordinates integrate as raw angles; sin/cos are expanded only
/// inside the field evaluation.
Trajectory integrate_rk4(std::span<const VectorField> basis, const TDepCoefficients& b,
                         const std::vector<double>& x0, double t0, double t1, double h);

/// Exact rigid motion of the plane: rotation pair (s, c) on the unit circle
/// plus a translation.
struct ISO2Element {
    Rat s{0}, c{1};
    Rat l1{0}, l2{0};

    static ISO2Element identity() { return {}; }
    /// "3/5,4/5;1,-2" -> rotation (s,c) = (3/5,4/5), translation (1,-2).
    static ISO2Element parse(std::string_view spec);

    /// Group law: rotation angles add, translations compose through the
    /// first rotation. Exactness of s^2 + c^2 = 1 is preserved.
    ISO2Element compose(const ISO2Element& o) const;

    double angle() const;
};

/// Action on a zero-trailer state (xi1, xi2, theta0):
/// (lambda + A_theta * xi, theta0 + theta).
std::vector<double> iso2_apply(const ISO2Element& g, const std::vector<double>& state);

struct SuperposeReport {
    double discrepancy = 0.0;
    double tolerance = 0.0;
    bool pass = false;
    std::size_t samples = 0;
};

/// Integrates a particular solution from x0, maps it through the group
/// action, and compares against re-integration from the transformed initial
/// condition (sup norm over all samples and coordinates).
SuperposeReport check_superposition(std::span<const VectorField> basis,
                                    const TDepCoefficients& b, const ISO2Element& g,
                                    const std::vector<double>& x0, double t0, double t1,
                                    double h, double tol);

}  // namespace kontact
