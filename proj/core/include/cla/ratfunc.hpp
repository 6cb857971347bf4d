#pragma once

#include <cla/rational.hpp>
#include <cla/unipoly.hpp>

#include <ostream>
#include <sstream>

namespace cla {

/// Element of Q(t): reduced fraction of univariate rational polynomials
/// with monic denominator.  Field arithmetic is exact.
class RationalFunction {
public:
    using Poly = UniPoly<Rational>;

    RationalFunction() : num_(), den_(Poly::one()) {}
    RationalFunction(long n) : num_(n == 0 ? Poly() : Poly(Rational(n))), den_(Poly::one()) {}
    RationalFunction(const Rational& r)
        : num_(r.is_zero() ? Poly() : Poly(r)), den_(Poly::one()) {}
    explicit RationalFunction(Poly num) : num_(std::move(num)), den_(Poly::one()) {}
    RationalFunction(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
        if (den_.is_zero()) throw domain_error("rational function with zero denominator");
        reduce();
    }

    /// The independent variable t.
    static RationalFunction t() { return RationalFunction(Poly::monomial(1)); }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return den_.degree() == 0 && num_ == den_; }
    bool is_polynomial() const { return den_.degree() == 0; }

    /// Numerator as a polynomial; requires a trivial denominator.
    Poly as_polynomial() const {
        if (!is_polynomial()) throw domain_error("rational function is not a polynomial");
        return num_;
    }

    RationalFunction operator-() const {
        RationalFunction r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }
    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
        return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
        return RationalFunction(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
        return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
        if (b.is_zero()) throw domain_error("division by zero rational function");
        return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
    }
    RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
    RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
    RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }
    RationalFunction& operator/=(const RationalFunction& o) { return *this = *this / o; }

    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    RationalFunction inverse() const {
        if (is_zero()) throw domain_error("inverse of zero rational function");
        return RationalFunction(den_, num_);
    }

    /// Evaluation at t = v; throws if v is a pole.
    Rational eval(const Rational& v) const {
        Rational d = den_.eval(v);
        if (d.is_zero()) throw domain_error("evaluation at a pole");
        return num_.eval(v) / d;
    }

private:
    void reduce() {
        if (num_.is_zero()) {
            den_ = Poly::one();
            return;
        }
        Poly g = cla::gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = num_ / g;
            den_ = den_ / g;
        }
        Rational lc = den_.leading();
        if (!lc.is_one()) {
            Rational inv = lc.inverse();
            num_ = inv * num_;
            den_ = inv * den_;
        }
    }

    Poly num_, den_;
};

} // namespace cla
