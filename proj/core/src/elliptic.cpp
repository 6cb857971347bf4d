#include <cla/elliptic.hpp>

#include <cla/parser.hpp>

namespace cla {

WeierstrassCurve::WeierstrassCurve(Poly F) : F_(std::move(F)) {
    if (F_.degree() != 3 || !F_.is_monic())
        throw domain_error("Weierstrass cubic must be monic of degree 3");
    // smoothness of the generic fiber: gcd(F, F') trivial over Q(t)
    if (gcd(F_, F_.derivative()).degree() != 0)
        throw domain_error("Weierstrass cubic has a repeated root");
}

WeierstrassCurve WeierstrassCurve::from_factored(const UniPoly<Rational>& a1,
                                                 const UniPoly<Rational>& a2) {
    RationalFunction ra1{a1}, ra2{a2};
    RationalFunction t2 = RationalFunction::t() * RationalFunction::t();
    // (x - t^2)(x^2 + a1 x + a2)
    Poly quad(std::vector<RationalFunction>{ra2, ra1, RationalFunction(1)});
    Poly lin(std::vector<RationalFunction>{-t2, RationalFunction(1)});
    WeierstrassCurve c(lin * quad);
    c.a1_ = ra1;
    c.a2_ = ra2;
    return c;
}

const RationalFunction& WeierstrassCurve::a1() const {
    if (!a1_) throw domain_error("curve was not built from the factored form");
    return *a1_;
}
const RationalFunction& WeierstrassCurve::a2() const {
    if (!a2_) throw domain_error("curve was not built from the factored form");
    return *a2_;
}

bool WeierstrassCurve::on_curve(const CurvePoint& p) const {
    if (p.infinity) return true;
    return p.y * p.y == eval_F(p.x);
}

void WeierstrassCurve::require_on_curve(const CurvePoint& p) const {
    if (!on_curve(p)) throw domain_error("point does not lie on the curve");
}

void SemiReducedDivisor::validate(const WeierstrassCurve& curve) const {
    for (const auto& [p, m] : support) {
        if (p.infinity) throw domain_error("divisor support contains O");
        curve.require_on_curve(p);
        if (m <= 0) throw domain_error("divisor multiplicities must be positive");
        if (p.y.is_zero() && m != 1)
            throw domain_error("2-torsion point with multiplicity > 1");
    }
    for (std::size_t i = 0; i < support.size(); ++i)
        for (std::size_t j = i + 1; j < support.size(); ++j) {
            const auto& p = support[i].first;
            const auto& q = support[j].first;
            if (p.x == q.x && !(p.y == q.y))
                throw domain_error("divisor contains an involution-conjugate pair");
            if (p == q) throw domain_error("duplicate support point");
        }
}

namespace {

using RF = RationalFunction;
using XPoly = UniPoly<RF>;

XPoly x_minus(const RF& a) {
    return XPoly(std::vector<RF>{-a, RF(1)});
}

RF tangent_slope(const WeierstrassCurve& curve, const CurvePoint& p) {
    if (p.y.is_zero()) throw domain_error("tangent slope at a 2-torsion point");
    return curve.F().derivative().eval(p.x) / (RF(2) * p.y);
}

} // namespace

MumfordPair mumford_of_divisor(const WeierstrassCurve& curve, const SemiReducedDivisor& d) {
    d.validate(curve);
    if (d.degree() > 2)
        throw domain_error("mumford_of_divisor implemented for degree <= 2");
    if (d.degree() == 0) return {XPoly::one(), XPoly()};
    if (d.degree() == 1) {
        const auto& p = d.support[0].first;
        return {x_minus(p.x), XPoly(p.y)};
    }
    if (d.support.size() == 2) {
        const auto& p = d.support[0].first;
        const auto& q = d.support[1].first;
        XPoly u = x_minus(p.x) * x_minus(q.x);
        // chord through the two points (x-coordinates differ: equal x with
        // distinct points is excluded by semi-reduction)
        RF m = (q.y - p.y) / (q.x - p.x);
        RF n = p.y - m * p.x;
        XPoly v(std::vector<RF>{n, m});
        return {u, v};
    }
    // doubled point: tangent line, the order-of-vanishing condition
    const auto& p = d.support[0].first;
    RF m = tangent_slope(curve, p);
    XPoly u = x_minus(p.x) * x_minus(p.x);
    XPoly v(std::vector<RF>{p.y - m * p.x, m});
    return {u, v};
}

GroebnerBasis<RationalFunction> mumford_via_groebner(const WeierstrassCurve& curve,
                                                     const SemiReducedDivisor& d) {
    d.validate(curve);
    if (d.degree() != 2 || d.support.size() != 2)
        throw domain_error("groebner route requires two distinct affine points");
    const auto& p = d.support[0].first;
    const auto& q = d.support[1].first;

    const std::vector<std::string> vars{"x", "y"};
    using MP = MultiPoly<RF>;
    auto X = MP::variable(vars, "x");
    auto Y = MP::variable(vars, "y");
    auto c = [&](const RF& v) { return MP::constant(vars, v); };
    MP fx(vars);
    for (int i = 0; i <= curve.F().degree(); ++i)
        fx += c(curve.F()[i]) * X.pow(i);

    Ideal<RF> ideal{vars,
                    {(X - c(p.x)) * (X - c(q.x)),
                     (X - c(p.x)) * (Y - c(q.y)),
                     (X - c(q.x)) * (Y - c(p.y)),
                     (Y - c(p.y)) * (Y - c(q.y)),
                     Y * Y - fx}};
    return reduce_basis(buchberger(ideal, MonomialOrder::lex({"y", "x"})));
}

CurvePoint negate(const WeierstrassCurve& curve, const CurvePoint& p) {
    curve.require_on_curve(p);
    if (p.infinity) return p;
    return CurvePoint::affine(p.x, -p.y);
}

CurvePoint add_points(const WeierstrassCurve& curve, const CurvePoint& p,
                      const CurvePoint& q) {
    curve.require_on_curve(p);
    curve.require_on_curve(q);
    if (p.infinity) return q;
    if (q.infinity) return p;
    if (p.x == q.x && p.y == -q.y) return CurvePoint::O();
    RF m;
    if (p == q) {
        if (p.y.is_zero()) return CurvePoint::O();
        m = tangent_slope(curve, p);
    } else {
        m = (q.y - p.y) / (q.x - p.x);
    }
    RF n = p.y - m * p.x;
    // v = m x + n; (v^2 - F)/u is -(x - x3) since F is monic
    RF c2 = curve.F()[2];
    RF x3 = m * m - c2 - p.x - q.x;
    RF y3 = m * x3 + n;
    return CurvePoint::affine(x3, -y3);
}

CurvePoint linear_combination(const WeierstrassCurve& curve,
                              const std::vector<CurvePoint>& points,
                              const std::vector<int>& coefficients) {
    if (points.size() != coefficients.size())
        throw domain_error("coefficient count mismatch");
    CurvePoint acc = CurvePoint::O();
    for (std::size_t i = 0; i < points.size(); ++i) {
        CurvePoint p = points[i];
        int c = coefficients[i];
        if (c < 0) {
            p = negate(curve, p);
            c = -c;
        }
        for (int k = 0; k < c; ++k) acc = add_points(curve, acc, p);
    }
    return acc;
}

PlaneCurve curve_from_point(const CurvePoint& p, const std::string& label) {
    if (p.infinity) throw domain_error("O has no affine image curve");
    if (!p.x.is_polynomial())
        throw domain_error("x-coordinate is not polynomial in t (section through a blow-up center)");
    UniPoly<Rational> xp = p.x.as_polynomial();
    if (xp.degree() > 2)
        throw domain_error("x-coordinate degree exceeds 2");
    const auto& vars = plane_vars();
    MultiPoly<Rational> poly = MultiPoly<Rational>::variable(vars, "x");
    auto T = MultiPoly<Rational>::variable(vars, "t");
    for (int i = 0; i <= xp.degree(); ++i)
        poly -= xp[i] * T.pow(i);
    PlaneCurve out;
    out.poly = std::move(poly);
    out.label = label;
    out.kind = xp.degree() == 2 ? CurveKind::conic : CurveKind::line;
    return out;
}

} // namespace cla
