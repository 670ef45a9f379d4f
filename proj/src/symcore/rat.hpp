#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace kontact {

/// Arbitrary-precision rational, always in lowest terms with positive
/// denominator. Thin wrapper over mpq_class that canonicalizes on every
/// construction path (mpq_class itself does not).
class Rat {
public:
    Rat() : v_(0) {}
    Rat(long n) : v_(n) {}  // NOLINT: implicit by design, mirrors int literals
    Rat(long n, long d);
    explicit Rat(const mpq_class& q) : v_(q) { v_.canonicalize(); }

    /// Parses "p", "-p/q" or a plain decimal like "0.25" (converted exactly).
    static Rat parse(std::string_view text);

    Rat operator-() const { return Rat(mpq_class(-v_), NoCanon{}); }
    Rat operator+(const Rat& o) const { return Rat(mpq_class(v_ + o.v_), NoCanon{}); }
    Rat operator-(const Rat& o) const { return Rat(mpq_class(v_ - o.v_), NoCanon{}); }
    Rat operator*(const Rat& o) const { return Rat(mpq_class(v_ * o.v_), NoCanon{}); }
    Rat operator/(const Rat& o) const;
    Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
    Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
    Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }

    bool operator==(const Rat& o) const { return v_ == o.v_; }
    bool operator!=(const Rat& o) const { return v_ != o.v_; }
    bool operator<(const Rat& o) const { return v_ < o.v_; }
    bool operator>(const Rat& o) const { return v_ > o.v_; }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    int sign() const { return sgn(v_); }
    Rat abs() const { return sign() < 0 ? -*this : *this; }

    Rat pow(unsigned e) const;

    mpz_class numerator() const { return v_.get_num(); }
    mpz_class denominator() const { return v_.get_den(); }

    double to_double() const { return v_.get_d(); }
    std::string str() const;

    const mpq_class& raw() const { return v_; }

private:
    struct NoCanon {};
    Rat(mpq_class q, NoCanon) : v_(std::move(q)) {}
    mpq_class v_;
};

/// gcd of |a|,|b| over Q: gcd of numerators / lcm of denominators. Used for
/// content normalization of polynomial rows; gcd(0,b) = |b|.
Rat rat_gcd(const Rat& a, const Rat& b);

}  // namespace kontact
