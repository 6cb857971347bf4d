#include <cla/families.hpp>
#include <cla/fixtures.hpp>
#include <cla/parser.hpp>

#include <doctest.h>

using namespace cla;

TEST_CASE("family names round-trip") {
    for (const char* n : {"C3a", "C3pa", "C2b", "L1b", "L2b", "L3b", "L4b", "D3b"})
        CHECK(family_to_string(family_from_string(n)) == n);
    CHECK_THROWS_AS(family_from_string("C5"), domain_error);
}

TEST_CASE("family members specialize to the reference curves") {
    // a = 2 members are the conics used by the symmetric fixture
    auto c = family_eval(FamilyName::C3a, Rational(2));
    CHECK(integer_primitive(c.poly) ==
          integer_primitive(parse_poly("32*t^2 + 20*x^2 - 84*x - 216", plane_vars())));
    CHECK(c.kind == CurveKind::conic);
    // b = 0: the L1 family member is -x + 3, i.e. the reference line L3
    auto l = family_eval(FamilyName::L1b, Rational(0));
    CHECK(integer_primitive(l.poly) == integer_primitive(symmetric_L(3).poly));
    CHECK(l.kind == CurveKind::line);
}

TEST_CASE("degenerate parameters are detected and rejected") {
    for (auto fam : {FamilyName::C3a, FamilyName::C3pa}) {
        CAPTURE(family_to_string(fam));
        for (long v : {-2, -1, 0, 1}) {
            CHECK(is_degenerate_param(fam, Rational(v)));
            CHECK_THROWS_AS(family_eval(fam, Rational(v)), domain_error);
        }
        CHECK_FALSE(is_degenerate_param(fam, Rational(2)));
        // irrational degeneracies appear as higher-degree minimal polynomials
        bool has_quadratic = false;
        for (const auto& cond : degenerate_params(fam))
            has_quadratic = has_quadratic || cond.minpoly.degree() == 2;
        CHECK(has_quadratic);
    }
    CHECK(is_degenerate_param(FamilyName::D3b, Rational(2)));
    CHECK(is_degenerate_param(FamilyName::D3b, Rational(-4, 5)));
    CHECK_FALSE(is_degenerate_param(FamilyName::D3b, Rational(1)));
    // overriding the guard returns the (possibly degenerate) member
    auto d = family_eval(FamilyName::D3b, Rational(2), /*allow_degenerate=*/true);
    CHECK_FALSE(smooth_conic(d.poly));
}

TEST_CASE("sampled family arrangements have the expected combinatorics") {
    auto base = [](const PlaneCurve& c3, const PlaneCurve& line) {
        Arrangement arr;
        PlaneCurve c1 = symmetric_C1();
        PlaneCurve c2 = symmetric_C2();
        PlaneCurve c3r = c3;
        c3r.label = "C3";
        PlaneCurve lr = line;
        lr.label = "L";
        arr.components = {c1, c2, c3r, lr};
        return arr;
    };

    for (long a : {2L, 3L, 5L})
        for (int i = 1; i <= 4; ++i) {
            CAPTURE(a);
            CAPTURE(i);
            auto arr = base(family_eval(FamilyName::C3a, Rational(a)), symmetric_L(i));
            CHECK(verify_comb(arr).pass);
        }
    for (long a : {2L, 3L})
        for (int i = 1; i <= 4; ++i) {
            CAPTURE(a);
            CAPTURE(i);
            auto arr = base(family_eval(FamilyName::C3pa, Rational(a)), symmetric_L(i));
            CHECK(verify_comb(arr).pass);
        }

    // a = -4 is not a listed degeneracy of C3a, but its member is tangent to
    // L4 at (0, -3), so the fourth arrangement fails the transversality clause
    auto bad = base(family_eval(FamilyName::C3a, Rational(-4)), symmetric_L(4));
    auto rep = verify_comb(bad);
    CHECK_FALSE(rep.pass);
    auto good = base(family_eval(FamilyName::C3a, Rational(-4)), symmetric_L(1));
    CHECK(verify_comb(good).pass);
}

TEST_CASE("deformed line quadruples stay combinatorially equivalent") {
    for (long b : {3L, -2L, 5L})
        for (int i = 0; i < 4; ++i) {
            CAPTURE(b);
            CAPTURE(i);
            const std::array<FamilyName, 4> fams{FamilyName::L1b, FamilyName::L2b,
                                                 FamilyName::L3b, FamilyName::L4b};
            Arrangement arr;
            PlaneCurve c1 = symmetric_C1();
            PlaneCurve c2 = family_eval(FamilyName::C2b, Rational(b), true);
            c2.label = "C2";
            PlaneCurve c3 = family_eval(FamilyName::D3b, Rational(b), true);
            c3.label = "C3";
            PlaneCurve l = family_eval(fams[(std::size_t)i], Rational(b), true);
            l.label = "L";
            arr.components = {c1, c2, c3, l};
            CHECK(verify_comb(arr).pass);
        }
}

TEST_CASE("table of parameter specializations") {
    auto rep = table1_check();
    CHECK(rep.pass);
    REQUIRE(rep.columns.size() == 4);
    for (const auto& col : rep.columns) {
        CAPTURE(col.b.str());
        CHECK(col.set_equal);
        CHECK(col.d_ok);
    }
    // the printed orders differ from the computed ones in every column (the
    // b = 1 row even repeats an entry), so the entrywise flag stays false
    for (const auto& col : rep.columns) CHECK_FALSE(col.perm_matches);
}
