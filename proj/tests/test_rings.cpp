#include <cla/parser.hpp>
#include <cla/ratfunc.hpp>
#include <cla/rational.hpp>
#include <cla/resultant.hpp>
#include <cla/unipoly.hpp>

#include <doctest.h>

#include <random>

using namespace cla;

using P = UniPoly<Rational>;

TEST_CASE("rational arithmetic basics") {
    Rational a(2, 3), b(-5, 7);
    CHECK(a + b == Rational(-1, 21));
    CHECK(a * b == Rational(-10, 21));
    CHECK(a / b == Rational(-14, 15));
    CHECK((a - a).is_zero());
    CHECK(Rational(4, 9).is_square());
    CHECK(Rational(4, 9).sqrt() == Rational(2, 3));
    CHECK_FALSE(Rational(2).is_square());
    CHECK(Rational(6, 4) == Rational(3, 2));
    CHECK_THROWS_AS(a / Rational(0), domain_error);
}

TEST_CASE("unipoly division and gcd") {
    P f = parse_unipoly("t^4 - 1");
    P g = parse_unipoly("t^2 - 1");
    auto [q, r] = divrem(f, g);
    CHECK(q == parse_unipoly("t^2 + 1"));
    CHECK(r.is_zero());
    CHECK(gcd(f, g).monic() == g.monic());
    CHECK(gcd(parse_unipoly("t^2 + 1"), parse_unipoly("t + 3")).degree() == 0);
    CHECK_THROWS_AS(f / parse_unipoly("t + 3"), domain_error); // inexact
}

TEST_CASE("squarefree decomposition recovers multiplicities") {
    P f = parse_unipoly("(t - 1)^3") * parse_unipoly("(t + 2)^2") *
          parse_unipoly("t^2 + 1");
    auto dec = squarefree_decomposition(f);
    REQUIRE(dec.size() == 3);
    CHECK(dec[0].first == parse_unipoly("t^2 + 1"));
    CHECK(dec[0].second == 1);
    CHECK(dec[1].first == parse_unipoly("t + 2"));
    CHECK(dec[1].second == 2);
    CHECK(dec[2].first == parse_unipoly("t - 1"));
    CHECK(dec[2].second == 3);
    P prod = P(Rational(1));
    for (const auto& [fac, m] : dec)
        for (int i = 0; i < m; ++i) prod = prod * fac;
    CHECK(prod.monic() == f.monic());
}

TEST_CASE("rational roots") {
    P f = parse_unipoly("(2*t - 3)*(t + 5)*(t^2 + 7)");
    auto roots = rational_roots(f);
    REQUIRE(roots.size() == 2);
    CHECK(((roots[0] == Rational(3, 2) && roots[1] == Rational(-5)) ||
           (roots[1] == Rational(3, 2) && roots[0] == Rational(-5))));
}

TEST_CASE("rational function field axioms on random elements") {
    std::mt19937_64 rng(7);
    auto rand_poly = [&](int maxdeg) {
        P p;
        int d = (int)(rng() % (maxdeg + 1));
        for (int i = 0; i <= d; ++i)
            p = p + P::monomial(i, Rational((long)(rng() % 19) - 9));
        return p;
    };
    for (int iter = 0; iter < 200; ++iter) {
        P pn = rand_poly(3), pd = rand_poly(2), qn = rand_poly(3), qd = rand_poly(2);
        if (pd.is_zero() || qd.is_zero()) continue;
        RationalFunction f(pn, pd), g(qn, qd);
        CHECK(f + g == g + f);
        CHECK(f * g == g * f);
        CHECK(f * (g + RationalFunction(1)) == f * g + f);
        CHECK((f - f).is_zero());
        if (!g.is_zero()) CHECK((f / g) * g == f);
    }
}

TEST_CASE("multivariate resultant eliminates the chosen variable") {
    auto vars = std::vector<std::string>{"t", "x"};
    // circle and line: resultant in x vanishes exactly at the two t-values
    auto f = parse_poly("t^2 + x^2 - 25", vars);
    auto g = parse_poly("x - t - 1", vars);
    auto r = resultant(f, g, "x");
    // (t)^2 + (t+1)^2 - 25 = 2t^2 + 2t - 24 = 2(t+4)(t-3)
    auto expect = parse_poly("2*t^2 + 2*t - 24", vars);
    CHECK(integer_primitive(r) == integer_primitive(expect));
}

TEST_CASE("resultant vanishes iff common factor") {
    auto vars = std::vector<std::string>{"t", "x"};
    auto f = parse_poly("(x - t)*(x + t + 1)", vars);
    auto g = parse_poly("(x - t)*(x - 2)", vars);
    CHECK(resultant(f, g, "x").is_zero());
    auto h = parse_poly("(x - t - 3)*(x - 2)", vars);
    CHECK_FALSE(resultant(f, h, "x").is_zero());
}
