#include <cla/splitting.hpp>

#include <cla/parser.hpp>

namespace cla {

const std::vector<std::string>& cover_vars() {
    static const std::vector<std::string> v{"t", "x", "y"};
    return v;
}

namespace {

using MP = MultiPoly<Rational>;

MP from_t_poly(const UniPoly<Rational>& p) {
    MP r(cover_vars());
    auto T = MP::variable(cover_vars(), "t");
    for (int i = 0; i <= p.degree(); ++i) r += p[i] * T.pow(i);
    return r;
}

} // namespace

Ideal<Rational> lift_ideal(const CurvePoint& p, int sign) {
    if (sign != 1 && sign != -1) throw domain_error("sign must be +1 or -1");
    if (p.infinity) throw domain_error("point at infinity has no plane image");
    if (!p.x.is_polynomial() || !p.y.is_polynomial())
        throw domain_error("point coordinates must be polynomial in t");
    auto X = MP::variable(cover_vars(), "x");
    auto Y = MP::variable(cover_vars(), "y");
    MP g1 = X - from_t_poly(p.x.as_polynomial());
    MP g2 = Y - Rational(sign) * from_t_poly(p.y.as_polynomial());
    return Ideal<Rational>{cover_vars(),
                           {integer_primitive(g1), integer_primitive(g2)}};
}

SplittingResult splitting_type_via_groebner(const CurvePoint& base,
                                            const CurvePoint& other) {
    MonomialOrder order = MonomialOrder::lex({"x", "y", "t"});
    auto intersect = [&](int sign) {
        Ideal<Rational> ib = lift_ideal(base, 1);
        Ideal<Rational> io = lift_ideal(other, sign);
        Ideal<Rational> joint{cover_vars(), ib.generators};
        joint.generators.insert(joint.generators.end(), io.generators.begin(),
                                io.generators.end());
        return reduce_basis(buchberger(joint, order));
    };

    SplittingResult res;
    res.basis_plus = intersect(1);
    res.basis_minus = intersect(-1);
    res.dim_plus = quotient_dimension(res.basis_plus);
    res.dim_minus = quotient_dimension(res.basis_minus);
    if (!res.dim_plus || !res.dim_minus)
        throw domain_error("infinite-dimensional quotient: curves share a component");

    // the identification of dimension with geometric point count relies on
    // the t-eliminant being squarefree
    for (const auto* gb : {&res.basis_plus, &res.basis_minus}) {
        for (const auto& e : gb->elements) {
            if (e.degree_in(e.var_index("x")) > 0 || e.degree_in(e.var_index("y")) > 0)
                continue;
            if (e.is_constant()) continue;
            UniPoly<Rational> f;
            for (const auto& [m, c] : e.terms())
                f = f + UniPoly<Rational>::monomial(m[0], c);
            if (gcd(f, f.derivative()).degree() != 0)
                throw domain_error("t-eliminant is not squarefree");
        }
    }

    long a = *res.dim_plus, b = *res.dim_minus;
    res.type.m1 = (int)std::min(a, b);
    res.type.m2 = (int)std::max(a, b);
    return res;
}

} // namespace cla
