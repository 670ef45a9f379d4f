#include "symcore/rat.hpp"

#include "symcore/errors.hpp"

namespace kontact {

Rat::Rat(long n, long d) : v_(n, d) {
    if (d == 0) throw DomainError("rational with zero denominator");
    v_.canonicalize();
}

Rat Rat::parse(std::string_view text) {
    std::string s(text);
    if (s.empty()) throw DomainError("empty rational literal");
    auto dot = s.find('.');
    if (dot != std::string::npos) {
        // Exact decimal conversion: digits after the dot become a power-of-ten
        // denominator.
        std::string digits = s.substr(0, dot) + s.substr(dot + 1);
        std::size_t frac_len = s.size() - dot - 1;
        std::string den = "1" + std::string(frac_len, '0');
        try {
            mpq_class q(digits + "/" + den, 10);
            q.canonicalize();
            return Rat(q);
        } catch (const std::invalid_argument&) {
            throw DomainError("invalid decimal literal: " + s);
        }
    }
    try {
        mpq_class q(s, 10);
        if (q.get_den() == 0) throw DomainError("rational with zero denominator: " + s);
        q.canonicalize();
        return Rat(q);
    } catch (const std::invalid_argument&) {
        throw DomainError("invalid rational literal: " + s);
    }
}

Rat Rat::operator/(const Rat& o) const {
    if (o.is_zero()) throw DomainError("rational division by zero");
    return Rat(mpq_class(v_ / o.v_), NoCanon{});
}

Rat Rat::pow(unsigned e) const {
    mpq_class r(1);
    mpq_class base = v_;
    while (e) {
        if (e & 1u) r *= base;
        base *= base;
        e >>= 1u;
    }
    return Rat(r, NoCanon{});
}

std::string Rat::str() const {
    return v_.get_str();
}

Rat rat_gcd(const Rat& a, const Rat& b) {
    if (a.is_zero()) return b.abs();
    if (b.is_zero()) return a.abs();
    mpz_class num, den;
    mpz_gcd(num.get_mpz_t(), a.numerator().get_mpz_t(), b.numerator().get_mpz_t());
    mpz_lcm(den.get_mpz_t(), a.denominator().get_mpz_t(), b.denominator().get_mpz_t());
    mpq_class q(num, den);
    q.canonicalize();
    Rat r(q);
    return r.abs();
}

}  // namespace kontact
