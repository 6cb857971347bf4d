#include <cla/parser.hpp>

#include <doctest.h>

#include <random>

using namespace cla;

TEST_CASE("polynomial parsing fixtures") {
    auto vars = std::vector<std::string>{"t", "x"};
    auto p = parse_poly("x - 5*t + 6", vars);
    CHECK(print_poly(p) == "x - 5*t + 6");
    CHECK(parse_poly(print_poly(p), vars) == p);
    CHECK(parse_poly("x^2 - 10*t*x + 25*x - 36", vars) ==
          parse_poly("25*x + x*x - 36 - 10*x*t", vars));
    CHECK(parse_poly("0", vars).is_zero());
    CHECK(print_poly(parse_poly("-x", vars)) == "-x");
    CHECK(print_poly(parse_poly("1/2*t^2 - t", vars)) == "1/2*t^2 - t");
    CHECK_THROWS_AS(parse_poly("x +", vars), parse_error);
    CHECK_THROWS_AS(parse_poly("y", vars), parse_error);
    CHECK_THROWS_AS(parse_poly("x^", vars), parse_error);
}

TEST_CASE("rational function parsing") {
    auto f = parse_ratfunc("(t^2 - 1)/(t + 2)");
    CHECK(parse_ratfunc(print_ratfunc(f)) == f);
    // a top-level slash needs a parenthesized denominator; otherwise it is
    // read as a rational coefficient
    CHECK(parse_ratfunc("t^2/(t)") == parse_ratfunc("t"));
    CHECK(parse_ratfunc("1/2*t") == parse_ratfunc("t") * RationalFunction(Rational(1, 2)));
    CHECK_THROWS_AS(parse_ratfunc("t/(0)"), domain_error);
}

TEST_CASE("parser round-trip on random polynomials") {
    std::mt19937_64 rng(20240817);
    auto vars = std::vector<std::string>{"t", "x", "y"};
    auto rand_rational = [&]() {
        long num = (long)(rng() % 199) - 99;
        long den = (long)(rng() % 12) + 1;
        return Rational(num, den);
    };
    int nontrivial = 0;
    for (int iter = 0; iter < 1200; ++iter) {
        MultiPoly<Rational>::TermMap terms;
        int nterms = (int)(rng() % 7);
        for (int k = 0; k < nterms; ++k) {
            Monomial m{(int)(rng() % 5), (int)(rng() % 5), (int)(rng() % 3)};
            Rational c = rand_rational();
            if (!c.is_zero()) terms[m] = c;
        }
        MultiPoly<Rational> p(vars, std::move(terms));
        if (!p.is_zero()) ++nontrivial;
        std::string text = print_poly(p);
        CAPTURE(text);
        CHECK(parse_poly(text, vars) == p);
        // canonical text is a fixed point
        CHECK(print_poly(parse_poly(text, vars)) == text);
    }
    CHECK(nontrivial >= 1000);
}
