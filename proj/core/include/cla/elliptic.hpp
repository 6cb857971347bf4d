#pragma once

#include <cla/groebner.hpp>
#include <cla/plane.hpp>
#include <cla/ratfunc.hpp>
#include <cla/unipoly.hpp>

#include <optional>
#include <string>
#include <vector>

namespace cla {

/// Point on y^2 = F(x) over Q(t): either the point at infinity O or an
/// affine point with coordinates in Q(t).
struct CurvePoint {
    bool infinity = true;
    RationalFunction x, y;

    static CurvePoint O() { return CurvePoint{}; }
    static CurvePoint affine(RationalFunction px, RationalFunction py) {
        return CurvePoint{false, std::move(px), std::move(py)};
    }

    friend bool operator==(const CurvePoint& a, const CurvePoint& b) {
        if (a.infinity || b.infinity) return a.infinity == b.infinity;
        return a.x == b.x && a.y == b.y;
    }
};

/// Elliptic curve y^2 = F(x) with F a monic cubic over Q(t).  When built
/// from the factored shape (x - t^2)(x^2 + a1(t) x + a2(t)) the factors
/// are kept for the closed-form contact computations.
class WeierstrassCurve {
public:
    using Coeff = RationalFunction;
    using Poly = UniPoly<Coeff>; // polynomial in x over Q(t)

    explicit WeierstrassCurve(Poly F);

    /// Builds from the factored form; a1, a2 are polynomials in t.
    static WeierstrassCurve from_factored(const UniPoly<Rational>& a1,
                                          const UniPoly<Rational>& a2);

    const Poly& F() const { return F_; }
    bool has_factored_form() const { return a1_.has_value(); }
    const RationalFunction& a1() const;
    const RationalFunction& a2() const;

    bool on_curve(const CurvePoint& p) const;
    void require_on_curve(const CurvePoint& p) const;

    /// F evaluated at an x-coordinate in Q(t).
    Coeff eval_F(const Coeff& x) const { return F_.eval(x); }

private:
    Poly F_;
    std::optional<RationalFunction> a1_, a2_;
};

/// Effective affine divisor with the semi-reduction constraints: no
/// involution-conjugate pairs, multiplicity 1 at 2-torsion points.
struct SemiReducedDivisor {
    std::vector<std::pair<CurvePoint, int>> support;

    int degree() const {
        int d = 0;
        for (const auto& [p, m] : support) d += m;
        return d;
    }

    /// Throws if the semi-reduced invariants fail on the given curve.
    void validate(const WeierstrassCurve& curve) const;
};

/// Mumford representation (u, v): u monic in x, deg v < deg u, u | v^2 - F.
struct MumfordPair {
    UniPoly<RationalFunction> u, v;
};

/// Interpolation route: u from the x-support, v the chord/tangent data.
/// Implemented for divisors of degree <= 2.
MumfordPair mumford_of_divisor(const WeierstrassCurve& curve, const SemiReducedDivisor& d);

/// Groebner route for a degree-2 divisor with distinct affine points: the
/// reduced lex (y > x) basis of the vanishing ideal, which must be
/// {u, y - v}.
GroebnerBasis<RationalFunction> mumford_via_groebner(const WeierstrassCurve& curve,
                                                     const SemiReducedDivisor& d);

CurvePoint negate(const WeierstrassCurve& curve, const CurvePoint& p);
CurvePoint add_points(const WeierstrassCurve& curve, const CurvePoint& p,
                      const CurvePoint& q);

/// Iterated sum of coefficient-weighted points (coefficients are signed
/// integers); an empty combination yields O.
CurvePoint linear_combination(const WeierstrassCurve& curve,
                              const std::vector<CurvePoint>& points,
                              const std::vector<int>& coefficients);

/// The plane curve x - x_P(t) = 0 cut out by an affine point whose
/// x-coordinate is a polynomial in t of degree <= 2.
PlaneCurve curve_from_point(const CurvePoint& p, const std::string& label = "");

} // namespace cla
