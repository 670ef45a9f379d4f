#pragma once

#include <string>

#include "symcore/trigpoly.hpp"

namespace kontact {

/// Quotient of trig polynomials. No canonical reduction is attempted; the
/// denominator only has to be not identically zero, and equality is decided
/// by cross-multiplication. Arithmetic keeps a denominator of 1 whenever both
/// operands have one, so purely polynomial pipelines never grow fractions.
class RatFrac {
public:
    RatFrac() = default;
    explicit RatFrac(TrigPoly num);
    RatFrac(TrigPoly num, TrigPoly den);

    static RatFrac zero(ChartPtr chart) { return RatFrac(TrigPoly::zero(std::move(chart))); }

    const TrigPoly& num() const { return num_; }
    const TrigPoly& den() const { return den_; }
    const ChartPtr& chart() const { return num_.chart(); }

    bool is_zero() const { return num_.is_zero(); }
    bool has_unit_denominator() const { return den_.is_one(); }
    /// The numerator, valid only with a unit denominator.
    const TrigPoly& as_poly() const;

    RatFrac operator-() const;
    RatFrac operator+(const RatFrac& o) const;
    RatFrac operator-(const RatFrac& o) const;
    RatFrac operator*(const RatFrac& o) const;
    RatFrac operator*(const TrigPoly& p) const;
    RatFrac& operator+=(const RatFrac& o);

    bool operator==(const RatFrac& o) const;
    bool operator!=(const RatFrac& o) const { return !(*this == o); }

    /// Quotient-rule derivative; stays polynomial when the denominator is 1.
    RatFrac derivative(std::size_t coord_index) const;

    std::string str() const;

private:
    TrigPoly num_;
    TrigPoly den_;
};

inline RatFrac operator*(const TrigPoly& p, const RatFrac& f) { return f * p; }

}  // namespace kontact
