#include <cla/fixtures.hpp>
#include <cla/parser.hpp>

#include <doctest.h>

using namespace cla;

namespace {

PlaneCurve curve(const std::string& label, const std::string& poly,
                 CurveKind kind = CurveKind::conic) {
    return PlaneCurve{integer_primitive(parse_poly(poly, plane_vars())), label, kind};
}

} // namespace

TEST_CASE("two transversal conics") {
    // circle and hyperbola meet transversally in (1,2), (2,1), (-1,-2), (-2,-1)
    auto f = curve("A", "t^2 + x^2 - 5");
    auto g = curve("B", "t*x - 2");
    auto prof = intersection_profile(f, g);
    CHECK(prof.bezout == 4);
    CHECK(prof.multiplicities() == std::vector<int>{1, 1, 1, 1});
}

TEST_CASE("two parabolas tangent at infinity") {
    // x = t^2 and x = 2 - t^2 meet in (1, 1), (-1, 1), and with
    // multiplicity two in the common point [1:0:0] on the line at infinity
    auto f = curve("A", "x - t^2");
    auto g = curve("B", "x + t^2 - 2");
    auto prof = intersection_profile(f, g);
    CHECK(prof.bezout == 4);
    CHECK(prof.multiplicities() == std::vector<int>{1, 1, 2});
}

TEST_CASE("tangent line and parabola") {
    auto f = curve("A", "x - t^2");
    auto l = curve("L", "x - 2*t + 1", CurveKind::line);
    auto prof = intersection_profile(f, l);
    CHECK(prof.bezout == 2);
    CHECK(prof.multiplicities() == std::vector<int>{2});
    REQUIRE(prof.points.size() == 1);
    REQUIRE(prof.points[0].point.has_value());
    CHECK(prof.points[0].point->first == Rational(1));
    CHECK(prof.points[0].point->second == Rational(1));
}

TEST_CASE("intersection at infinity is handled by a rotated projection") {
    // x = 0 is tangent to x^2 - 10tx + 25x - 36 at a point on the line at
    // infinity of the chart
    auto c = curve("C", "x^2 - 10*t*x + 25*x - 36");
    auto l = curve("L", "x", CurveKind::line);
    auto prof = intersection_profile(c, l);
    CHECK(prof.bezout == 2);
    CHECK(prof.multiplicities() == std::vector<int>{2});
}

TEST_CASE("shared component is rejected") {
    auto f = curve("A", "(x - t)*(x + t)");
    auto g = curve("B", "(x - t)*(x - 1)");
    CHECK_THROWS_AS(intersection_profile(f, g), domain_error);
}

TEST_CASE("profile points lie on both curves") {
    auto arr = builtin_arrangement("ref-C1");
    for (std::size_t i = 0; i < arr.components.size(); ++i)
        for (std::size_t j = i + 1; j < arr.components.size(); ++j) {
            const auto& f = arr.components[i];
            const auto& g = arr.components[j];
            auto prof = intersection_profile(f, g);
            int total = 0;
            for (const auto& e : prof.points) {
                total += e.multiplicity;
                if (!e.point) continue;
                auto [t0, x0] = *e.point;
                auto at = [&](const PlaneCurve& c) {
                    return c.poly.specialize("t", t0).specialize("x", x0);
                };
                CHECK(at(f).is_zero());
                CHECK(at(g).is_zero());
            }
            CHECK(total == prof.bezout);
        }
}

TEST_CASE("combinatorial type of the built-in arrangements") {
    for (const char* name :
         {"ref-C1", "ref-C2", "ref-C3", "ref-C4", "symmetric-Q"}) {
        CAPTURE(name);
        auto rep = verify_comb(builtin_arrangement(name));
        CHECK(rep.pass);
        CHECK(rep.clauses.size() == 4);
    }
}

TEST_CASE("comb check fails when the conic degenerates") {
    // replace the weak contact conic by one through only one base point
    auto arr = builtin_arrangement("ref-C1");
    for (auto& c : arr.components)
        if (c.label == "C3") c = curve("C3", "x - t^2 + 1");
    auto rep = verify_comb(arr);
    CHECK_FALSE(rep.pass);
}

TEST_CASE("smooth conic determinant") {
    CHECK(smooth_conic(parse_poly("x - t^2", plane_vars())));
    CHECK(smooth_conic(parse_poly("t^2 + x^2 - 1", plane_vars())));
    CHECK_FALSE(smooth_conic(parse_poly("t*x", plane_vars())));       // line pair
    CHECK_FALSE(smooth_conic(parse_poly("(t + x)^2", plane_vars()))); // double line
    CHECK_THROWS_AS(smooth_conic(parse_poly("x - t", plane_vars())), domain_error);
}
