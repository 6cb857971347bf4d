#pragma once

#include <cla/error.hpp>

#include <gmpxx.h>

#include <compare>
#include <iosfwd>
#include <string>

namespace cla {

using Integer = mpz_class;

/// Arbitrary-precision rational number, always stored in canonical form:
/// gcd(|num|, den) = 1 and den >= 1.  Arithmetic is exact.
class Rational {
public:
    Rational() : q_(0) {}
    Rational(long n) : q_(n) {}
    Rational(const Integer& n) : q_(n) {}
    Rational(long n, long d) : q_(n, d) {
        if (d == 0) throw domain_error("rational with zero denominator");
        q_.canonicalize();
    }
    Rational(const Integer& n, const Integer& d) : q_(n, d) {
        if (d == 0) throw domain_error("rational with zero denominator");
        q_.canonicalize();
    }
    explicit Rational(const mpq_class& q) : q_(q) { q_.canonicalize(); }

    /// Parses "a" or "a/b" with optional sign.
    static Rational from_string(const std::string& s) {
        mpq_class q;
        if (q.set_str(s, 10) != 0)
            throw parse_error("invalid rational '" + s + "'", 0);
        q.canonicalize();
        return Rational(q);
    }

    const Integer& num() const { return q_.get_num(); }
    const Integer& den() const { return q_.get_den(); }

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_one() const { return q_ == 1; }
    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }

    Rational operator-() const { return Rational(mpq_class(-q_)); }
    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw domain_error("rational division by zero");
        q_ /= o.q_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.q_ <= b.q_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.q_ > b.q_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.q_ >= b.q_; }

    Rational inverse() const {
        if (is_zero()) throw domain_error("inverse of zero");
        return Rational(mpq_class(1 / q_));
    }

    Rational abs() const { return Rational(mpq_class(::abs(q_))); }

    /// Exact square root; throws if *this is not a square of a rational.
    Rational sqrt() const {
        if (sign() < 0) throw domain_error("square root of negative rational");
        Integer n = ::sqrt(num()), d = ::sqrt(den());
        if (n * n != num() || d * d != den())
            throw domain_error("rational is not a perfect square");
        return Rational(n, d);
    }

    bool is_square() const {
        if (sign() < 0) return false;
        Integer n = ::sqrt(num()), d = ::sqrt(den());
        return n * n == num() && d * d == den();
    }

    std::string str() const { return q_.get_str(); }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r);

private:
    mpq_class q_;
};

inline std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.q_;
}

inline Rational gcd(const Rational& a, const Rational& b) {
    // gcd on Q: gcd of numerators over lcm of denominators; used for content.
    Integer n = ::gcd(a.num(), b.num());
    Integer d = ::lcm(a.den(), b.den());
    return Rational(n, d);
}

} // namespace cla
