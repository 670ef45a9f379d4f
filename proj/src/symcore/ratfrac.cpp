#include "symcore/ratfrac.hpp"

#include "symcore/errors.hpp"

namespace kontact {

RatFrac::RatFrac(TrigPoly num)
    : num_(std::move(num)), den_(TrigPoly::constant(num_.chart(), Rat(1))) {}

RatFrac::RatFrac(TrigPoly num, TrigPoly den) : num_(std::move(num)), den_(std::move(den)) {
    require_same_chart(num_.chart(), den_.chart(), "fraction construction");
    if (den_.is_zero()) throw DomainError("fraction with identically zero denominator");
    if (num_.is_zero()) den_ = TrigPoly::constant(num_.chart(), Rat(1));
}

const TrigPoly& RatFrac::as_poly() const {
    if (!den_.is_one()) throw DomainError("fraction has a non-unit denominator: " + str());
    return num_;
}

RatFrac RatFrac::operator-() const {
    RatFrac r = *this;
    r.num_ = -r.num_;
    return r;
}

RatFrac RatFrac::operator+(const RatFrac& o) const {
    if (den_.is_one() && o.den_.is_one()) return RatFrac(num_ + o.num_);
    if (den_ == o.den_) return RatFrac(num_ + o.num_, den_);
    return RatFrac(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFrac RatFrac::operator-(const RatFrac& o) const { return *this + (-o); }

RatFrac RatFrac::operator*(const RatFrac& o) const {
    if (den_.is_one() && o.den_.is_one()) return RatFrac(num_ * o.num_);
    return RatFrac(num_ * o.num_, den_ * o.den_);
}

RatFrac RatFrac::operator*(const TrigPoly& p) const {
    return RatFrac(num_ * p, den_);
}

RatFrac& RatFrac::operator+=(const RatFrac& o) {
    *this = *this + o;
    return *this;
}

bool RatFrac::operator==(const RatFrac& o) const {
    if (!same_chart(chart(), o.chart())) return false;
    if (den_ == o.den_) return num_ == o.num_;
    return num_ * o.den_ == o.num_ * den_;
}

RatFrac RatFrac::derivative(std::size_t coord_index) const {
    if (den_.is_one()) return RatFrac(num_.derivative(coord_index));
    return RatFrac(num_.derivative(coord_index) * den_ - num_ * den_.derivative(coord_index),
                   den_ * den_);
}

std::string RatFrac::str() const {
    if (den_.is_one()) return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
}

}  // namespace kontact
