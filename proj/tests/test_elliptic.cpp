#include <cla/arrangement.hpp>
#include <cla/fixtures.hpp>
#include <cla/parser.hpp>

#include <doctest.h>

#include <random>

using namespace cla;

namespace {

const QuarticFixture& fixture() {
    static const QuarticFixture f = builtin_quartic("ref-Q");
    return f;
}

} // namespace

TEST_CASE("fixture points lie on the curve") {
    const auto& f = fixture();
    for (const auto& [name, p] : f.points) {
        CAPTURE(name);
        CHECK(f.curve.on_curve(p));
    }
    CHECK_FALSE(f.curve.on_curve(
        CurvePoint::affine(parse_ratfunc("t"), parse_ratfunc("t"))));
}

TEST_CASE("curve construction validates its input") {
    // y^2 = (x - t^2)^2 (x - 1) is singular along the double factor
    CHECK_THROWS_AS(WeierstrassCurve::from_factored(parse_unipoly("-2*t^2 + 1"),
                                                    parse_unipoly("t^4 - t^2")),
                    domain_error);
}

TEST_CASE("group law identities") {
    const auto& f = fixture();
    const auto& curve = f.curve;
    CurvePoint O = CurvePoint::O();
    std::vector<CurvePoint> pts{O};
    for (const auto& [name, p] : f.points) pts.push_back(p);

    for (const auto& p : pts) {
        CHECK(add_points(curve, p, O) == p);
        CHECK(add_points(curve, O, p) == p);
        CHECK(add_points(curve, p, negate(curve, p)) == O);
    }
    // the 2-torsion point doubles to O
    const CurvePoint& T = f.point("T");
    CHECK(negate(curve, T) == T);
    CHECK(add_points(curve, T, T) == O);
}

TEST_CASE("group law is commutative and associative on the fixture points") {
    const auto& f = fixture();
    const auto& curve = f.curve;
    std::vector<CurvePoint> pts{CurvePoint::O()};
    for (const auto& [name, p] : f.points) pts.push_back(p);

    for (const auto& p : pts)
        for (const auto& q : pts) CHECK(add_points(curve, p, q) == add_points(curve, q, p));

    for (const auto& p : pts)
        for (const auto& q : pts)
            for (const auto& r : pts)
                CHECK(add_points(curve, add_points(curve, p, q), r) ==
                      add_points(curve, p, add_points(curve, q, r)));
}

TEST_CASE("linear combinations agree with iterated addition") {
    const auto& f = fixture();
    const auto& curve = f.curve;
    std::vector<CurvePoint> gens{f.point("P12"), f.point("P23"), f.point("P31")};
    CurvePoint twice = linear_combination(curve, gens, {2, 0, 0});
    CHECK(twice == add_points(curve, gens[0], gens[0]));
    CurvePoint mixed = linear_combination(curve, gens, {1, -1, 2});
    CurvePoint manual = add_points(
        curve, add_points(curve, gens[0], negate(curve, gens[1])),
        add_points(curve, gens[2], gens[2]));
    CHECK(mixed == manual);
    CHECK(linear_combination(curve, gens, {0, 0, 0}) == CurvePoint::O());
}

TEST_CASE("mumford pair of a single point and a chord pair") {
    const auto& f = fixture();
    const CurvePoint& p = f.point("P12");
    SemiReducedDivisor d1{{{p, 1}}};
    MumfordPair m1 = mumford_of_divisor(f.curve, d1);
    CHECK(m1.u.degree() == 1);
    CHECK(m1.u[0] == -p.x);
    CHECK(m1.v[0] == p.y);

    SemiReducedDivisor d2{{{p, 1}, {f.point("P23"), 1}}};
    MumfordPair m2 = mumford_of_divisor(f.curve, d2);
    CHECK(m2.u.degree() == 2);
    // u | v^2 - F
    auto diff = m2.v * m2.v - f.curve.F();
    auto [q, r] = divrem(diff, m2.u);
    CHECK(r.is_zero());
}

TEST_CASE("semi-reduction constraints are enforced") {
    const auto& f = fixture();
    const CurvePoint& p = f.point("P12");
    SemiReducedDivisor with_conjugate{{{p, 1}, {negate(f.curve, p), 1}}};
    CHECK_THROWS_AS(with_conjugate.validate(f.curve), domain_error);
    SemiReducedDivisor torsion_double{{{f.point("T"), 2}}};
    CHECK_THROWS_AS(torsion_double.validate(f.curve), domain_error);
    SemiReducedDivisor off_curve{
        {{CurvePoint::affine(parse_ratfunc("t"), parse_ratfunc("1")), 1}}};
    CHECK_THROWS_AS(off_curve.validate(f.curve), domain_error);
}

TEST_CASE("mumford routes agree on random degree-2 divisors") {
    const auto& f = fixture();
    const auto& curve = f.curve;
    std::vector<CurvePoint> gens{f.point("P12"), f.point("P23"), f.point("P31")};

    // a pool of distinct rational points from small lattice combinations
    std::vector<CurvePoint> pool;
    for (int a = -2; a <= 2; ++a)
        for (int b = -2; b <= 2; ++b)
            for (int c = -2; c <= 2; ++c) {
                CurvePoint p = linear_combination(curve, gens, {a, b, c});
                if (p.infinity) continue;
                bool dup = false;
                for (const auto& q : pool) dup = dup || q == p;
                if (!dup) pool.push_back(p);
            }
    REQUIRE(pool.size() >= 20);

    std::mt19937_64 rng(99);
    int tested = 0;
    while (tested < 100) {
        const CurvePoint& p = pool[rng() % pool.size()];
        const CurvePoint& q = pool[rng() % pool.size()];
        if (p.x == q.x) continue; // equal or conjugate: not a chord divisor
        SemiReducedDivisor d{{{p, 1}, {q, 1}}};
        d.validate(curve);
        MumfordPair m = mumford_of_divisor(curve, d);
        auto gb = mumford_via_groebner(curve, d);
        REQUIRE(gb.elements.size() == 2);
        // the reduced basis is {u, y - v} up to ordering
        auto X = MultiPoly<RationalFunction>::variable({"x", "y"}, "x");
        auto Y = MultiPoly<RationalFunction>::variable({"x", "y"}, "y");
        auto from_uni = [&](const UniPoly<RationalFunction>& h) {
            MultiPoly<RationalFunction> out({"x", "y"});
            for (int i = 0; i <= h.degree(); ++i) out += h[i] * X.pow(i);
            return out;
        };
        MultiPoly<RationalFunction> u_mp = from_uni(m.u);
        MultiPoly<RationalFunction> yv = Y - from_uni(m.v);
        bool match = (gb.elements[0] == u_mp && gb.elements[1] == yv) ||
                     (gb.elements[1] == u_mp && gb.elements[0] == yv);
        CHECK(match);
        auto diff = m.v * m.v - curve.F();
        CHECK(divrem(diff, m.u).second.is_zero());
        ++tested;
    }
}

TEST_CASE("chord points match the fixture") {
    const auto& f = fixture();
    CHECK(chord_point(f.curve, Rational(2), Rational(3)) == f.point("P12"));
    CHECK(chord_point(f.curve, Rational(2), Rational(6)) == f.point("P23"));
    CHECK(chord_point(f.curve, Rational(3), Rational(6)) == f.point("P31"));
}

TEST_CASE("contact x-coordinates agree with the group-law route") {
    const auto& f = fixture();
    const auto& curve = f.curve;
    for (auto [a, b] : std::vector<std::pair<const char*, const char*>>{
             {"P12", "P23"}, {"P12", "P31"}, {"P23", "P31"}}) {
        const CurvePoint& pa = f.point(a);
        const CurvePoint& pb = f.point(b);
        for (int sign : {1, -1}) {
            CurvePoint sum =
                add_points(curve, pa, sign == 1 ? pb : negate(curve, pb));
            CHECK(weak_contact_x(curve, pa, pb, sign) == sum.x);
        }
    }
}

TEST_CASE("curve from point uses the x-coordinate") {
    const auto& f = fixture();
    PlaneCurve c = curve_from_point(f.point("Q0"), "C3");
    CHECK(c.kind == CurveKind::conic);
    CHECK(integer_primitive(c.poly) ==
          integer_primitive(parse_poly("4*x - 5*t^2 + 8*t - 12", plane_vars())));
    PlaneCurve l = curve_from_point(f.point("Q3"), "L3");
    CHECK(l.kind == CurveKind::line);
    CHECK_THROWS_AS(curve_from_point(CurvePoint::O()), domain_error);
}
