#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>

namespace ap {

struct RationalOverflow : std::runtime_error {
    explicit RationalOverflow(const std::string& what) : std::runtime_error(what) {}
};

struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// Exact rational number, always in canonical form (reduced, denominator > 0).
/// If AP_MAX_DENOM_BITS is set in the environment, any numerator or denominator
/// exceeding that bit size after an operation raises RationalOverflow.
class Rational {
  public:
    Rational() : v_(0) {}
    Rational(long n) : v_(static_cast<signed long>(n)) {}
    Rational(long n, long d);
    explicit Rational(const mpq_class& q) : v_(q) { canonicalize(); }
    explicit Rational(const mpz_class& z) : v_(z) {}

    /// Parses "p", "-p", or "p/q" with arbitrary-precision parts.
    static Rational parse(const std::string& s);

    const mpq_class& raw() const { return v_; }
    mpz_class num() const { return v_.get_num(); }
    mpz_class den() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; check(); return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; check(); return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; check(); return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { a += b; return a; }
    friend Rational operator-(Rational a, const Rational& b) { a -= b; return a; }
    friend Rational operator*(Rational a, const Rational& b) { a *= b; return a; }
    friend Rational operator/(Rational a, const Rational& b) { a /= b; return a; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    Rational abs() const { return sign() < 0 ? -*this : *this; }
    Rational inverse() const;

    Rational one_like() const { return Rational(1); }

    /// Exact string form: "p" or "p/q".
    std::string str() const;

    /// Bit-size cap from AP_MAX_DENOM_BITS (0 = unlimited). Read once per process.
    static std::uint64_t max_bits();

  private:
    void canonicalize() { v_.canonicalize(); check(); }
    void check() const;

    mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rational& q);

}  // namespace ap
