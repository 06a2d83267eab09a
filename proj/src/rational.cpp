#include "ap/rational.hpp"

#include <cstdlib>
#include <ostream>

namespace ap {

Rational::Rational(long n, long d) {
    if (d == 0) throw std::domain_error("Rational: zero denominator");
    v_ = mpq_class(n, d);
    canonicalize();
}

Rational Rational::parse(const std::string& s) {
    if (s.empty()) throw ParseError("empty rational literal");
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) {
            mpz_class n(s);
            return Rational(mpq_class(n));
        }
        mpz_class n(s.substr(0, slash));
        mpz_class d(s.substr(slash + 1));
        if (d == 0) throw ParseError("zero denominator in '" + s + "'");
        mpq_class q(n, d);
        return Rational(q);
    } catch (const std::invalid_argument&) {
        throw ParseError("bad rational literal '" + s + "'");
    }
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    v_ /= o.v_;
    check();
    return *this;
}

Rational Rational::inverse() const {
    if (is_zero()) throw std::domain_error("Rational: inverse of zero");
    return Rational(mpq_class(1) / v_);
}

std::string Rational::str() const {
    if (is_integer()) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::uint64_t Rational::max_bits() {
    static const std::uint64_t cap = [] {
        const char* e = std::getenv("AP_MAX_DENOM_BITS");
        if (!e || !*e) return std::uint64_t{0};
        char* end = nullptr;
        unsigned long long b = std::strtoull(e, &end, 10);
        if (end && *end != '\0') throw ParseError("AP_MAX_DENOM_BITS is not a number");
        return static_cast<std::uint64_t>(b);
    }();
    return cap;
}

void Rational::check() const {
    const std::uint64_t cap = max_bits();
    if (cap == 0) return;
    if (mpz_sizeinbase(v_.get_num().get_mpz_t(), 2) > cap ||
        mpz_sizeinbase(v_.get_den().get_mpz_t(), 2) > cap) {
        throw RationalOverflow("rational exceeds AP_MAX_DENOM_BITS=" + std::to_string(cap));
    }
}

std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.str(); }

}  // namespace ap
