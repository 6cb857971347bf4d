#include <cla/arrangement.hpp>

#include <cla/parser.hpp>
#include <cla/resultant.hpp>

#include <algorithm>
#include <array>

namespace cla {

const PlaneCurve& Arrangement::by_label(const std::string& label) const {
    for (const auto& c : components)
        if (c.label == label) return c;
    throw domain_error("no component labeled '" + label + "'");
}

std::vector<int> PairProfile::multiplicities() const {
    std::vector<int> m;
    for (const auto& e : points) m.push_back(e.multiplicity);
    std::sort(m.begin(), m.end());
    return m;
}

namespace {

using MP = MultiPoly<Rational>;

const std::vector<std::string>& txz() {
    static const std::vector<std::string> v{"t", "x", "z"};
    return v;
}

MP homogenize(const MP& p) {
    int d = p.degree();
    MP::TermMap terms;
    for (const auto& [m, c] : p.terms()) {
        Monomial mm{m[0], m[1], d - total_degree(m)};
        terms[mm] = c;
    }
    return MP(txz(), std::move(terms));
}

/// F(t + a*x, x, z + b*x + c*t)
MP shear(const MP& h, const Projection& pr) {
    auto T = MP::variable(txz(), "t");
    auto X = MP::variable(txz(), "x");
    auto Z = MP::variable(txz(), "z");
    return h.substitute({T + pr.a * X, X, Z + pr.b * X + pr.c * T});
}

UniPoly<Rational> to_unipoly_t(const MP& p) {
    UniPoly<Rational> r;
    for (const auto& [m, c] : p.terms()) {
        if (m[1] != 0 || m[2] != 0) throw domain_error("not univariate in t");
        r = r + UniPoly<Rational>::monomial(m[0], c);
    }
    return r;
}

UniPoly<Rational> slice_in_x(const MP& p, const Rational& t0) {
    // p(t0, x, 1) as a univariate polynomial in x
    MP s = p.specialize("t", t0).specialize("z", Rational(1));
    UniPoly<Rational> r;
    for (const auto& [m, c] : s.terms()) r = r + UniPoly<Rational>::monomial(m[1], c);
    return r;
}

} // namespace

std::optional<UniPoly<Rational>> projected_eliminant(const PlaneCurve& f,
                                                     const PlaneCurve& g,
                                                     const Projection& proj) {
    int d1 = f.poly.degree(), d2 = g.poly.degree();
    MP hf = shear(homogenize(f.poly.extend(txz())), proj);
    MP hg = shear(homogenize(g.poly.extend(txz())), proj);
    // the projection center (a, 1, b) maps to (0, 1, 0); it must avoid both
    // curves so that the x-leading coefficients stay nonzero
    if (hf.degree_in(1) != d1 || hg.degree_in(1) != d2) return std::nullopt;
    MP res = resultant(hf, hg, "x");
    if (res.is_zero()) throw domain_error("curves share a common component");
    // binary form in (t, z) of degree d1*d2; full degree at z = 1 means no
    // intersection escaped to the image line at infinity
    MP affine = res.specialize("z", Rational(1));
    UniPoly<Rational> r = to_unipoly_t(affine);
    if (r.degree() != d1 * d2) return std::nullopt;
    return r.monic();
}

const std::vector<Projection>& projection_candidates() {
    static const std::vector<Projection> cands = [] {
        std::vector<std::array<long, 3>> raw{
            {0, 0, 0},  {1, 0, 0},  {-1, 0, 0}, {0, 1, 0},  {1, 1, 0},
            {2, 0, 0},  {-1, 1, 0}, {2, 1, 0},  {0, 2, 0},  {3, 0, 0},
            {1, -1, 0}, {-2, 0, 0}, {3, 1, 0},  {1, 2, 0},  {5, 0, 0},
            {2, 3, 0},  {7, 1, 0},  {-3, 2, 0}, {5, 3, 0},  {4, 7, 0},
            {0, 0, 1},  {1, 0, 1},  {0, 1, 1},  {1, -1, 1}, {2, 1, 1},
            {0, 2, 1},  {1, 2, 1},  {-1, 1, 2}, {3, 1, 2},  {5, 3, 2}};
        std::vector<Projection> v;
        for (auto [a, b, c] : raw)
            v.push_back({Rational(a), Rational(b), Rational(c)});
        return v;
    }();
    return cands;
}

PairProfile intersection_profile(const PlaneCurve& f, const PlaneCurve& g) {
    int bezout = f.poly.degree() * g.poly.degree();
    std::optional<PairProfile> best;
    int best_count = -1;
    for (const auto& proj : projection_candidates()) {
        auto r = projected_eliminant(f, g, proj);
        if (!r) continue;
        auto sqf = squarefree_decomposition(*r);
        int count = 0;
        for (const auto& [fac, mult] : sqf) count += fac.degree();
        if (count <= best_count) continue;
        best_count = count;

        PairProfile prof;
        prof.bezout = bezout;
        prof.proj = proj;
        prof.eliminant = *r;
        MP hf = shear(homogenize(f.poly.extend(txz())), proj);
        MP hg = shear(homogenize(g.poly.extend(txz())), proj);
        for (const auto& [fac, mult] : sqf) {
            std::vector<Rational> roots = rational_roots(fac);
            for (const auto& t0 : roots) {
                ProfileEntry e;
                e.multiplicity = mult;
                // the fiber line over t0 carries a single geometric point;
                // recover its x-coordinate from the common factor
                UniPoly<Rational> h = gcd(slice_in_x(hf, t0), slice_in_x(hg, t0));
                std::vector<Rational> xs = rational_roots(h);
                if (xs.size() == 1) {
                    Rational x0 = xs[0];
                    Rational z_old = Rational(1) + proj.b * x0 + proj.c * t0;
                    if (z_old.is_zero()) {
                        e.at_infinity = true;
                    } else {
                        e.point =
                            std::make_pair((t0 + proj.a * x0) / z_old, x0 / z_old);
                    }
                }
                prof.points.push_back(std::move(e));
            }
            int irrational = fac.degree() - (int)roots.size();
            for (int k = 0; k < irrational; ++k) {
                ProfileEntry e;
                e.multiplicity = mult;
                prof.points.push_back(std::move(e));
            }
        }
        best = std::move(prof);
        if (best_count == bezout) break; // cannot get finer
    }
    if (!best) throw domain_error("no admissible projection found for the pair");
    return *best;
}

namespace {

std::string multiset_text(const std::vector<int>& m) {
    std::string s = "{";
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(m[i]);
    }
    return s + "}";
}

/// Product of the multiplicity-m factors of the squarefree decomposition.
UniPoly<Rational> part_of_multiplicity(const UniPoly<Rational>& r, int m) {
    UniPoly<Rational> out = UniPoly<Rational>::one();
    for (const auto& [fac, mult] : squarefree_decomposition(r))
        if (mult == m) out = out * fac;
    return out;
}

} // namespace

CombReport verify_comb(const Arrangement& arr) {
    if (arr.components.size() != 4) throw domain_error("expected four components");
    const PlaneCurve& c1 = arr.by_label("C1");
    const PlaneCurve& c2 = arr.by_label("C2");
    const PlaneCurve& c3 = arr.by_label("C3");
    const PlaneCurve* line = nullptr;
    for (const auto& c : arr.components)
        if (c.label != "C1" && c.label != "C2" && c.label != "C3") line = &c;
    if (!line) throw domain_error("no line component");
    if (c1.poly.degree() != 2 || c2.poly.degree() != 2 || c3.poly.degree() != 2 ||
        line->poly.degree() != 1)
        throw domain_error("component degrees do not match C1,C2,C3,L");

    // one projection admissible for every pair, maximizing total separation
    std::vector<std::pair<const PlaneCurve*, const PlaneCurve*>> pairs{
        {&c1, &c2}, {&c1, &c3}, {&c2, &c3}, {&c1, line}, {&c2, line}, {&c3, line}};
    std::vector<UniPoly<Rational>> elims(pairs.size());
    int best_total = -1;
    for (const auto& proj : projection_candidates()) {
        std::vector<UniPoly<Rational>> cur;
        bool ok = true;
        int total = 0;
        for (const auto& [f, g] : pairs) {
            auto r = projected_eliminant(*f, *g, proj);
            if (!r) { ok = false; break; }
            for (const auto& [fac, mult] : squarefree_decomposition(*r))
                total += fac.degree();
            cur.push_back(*r);
        }
        if (!ok || total <= best_total) continue;
        best_total = total;
        elims = cur;
    }
    CombReport rep;
    if (best_total < 0) throw domain_error("no shared projection admissible");

    const auto& r12 = elims[0];
    const auto& r13 = elims[1];
    const auto& r23 = elims[2];
    const auto& rl1 = elims[3];
    const auto& rl2 = elims[4];
    const auto& rl3 = elims[5];

    auto multiset = [](const UniPoly<Rational>& r) {
        std::vector<int> m;
        for (const auto& [fac, mult] : squarefree_decomposition(r))
            for (int k = 0; k < fac.degree(); ++k) m.push_back(mult);
        std::sort(m.begin(), m.end());
        return m;
    };

    {
        CombClause c{"C1.C2 four simple points"};
        c.pass = multiset(r12) == std::vector<int>{1, 1, 1, 1};
        c.detail = multiset_text(multiset(r12));
        rep.clauses.push_back(c);
    }
    {
        CombClause c{"C3 through two of the base points, tangent to C1 and C2 elsewhere"};
        UniPoly<Rational> s13 = part_of_multiplicity(r13, 1);
        UniPoly<Rational> h13 = part_of_multiplicity(r13, 2);
        UniPoly<Rational> s23 = part_of_multiplicity(r23, 1);
        UniPoly<Rational> h23 = part_of_multiplicity(r23, 2);
        bool shape = multiset(r13) == std::vector<int>{1, 1, 2} &&
                     multiset(r23) == std::vector<int>{1, 1, 2};
        bool through = shape && s13 == s23 && (r12 % s13).is_zero();
        bool elsewhere = shape && gcd(h13, r12).degree() == 0 &&
                         gcd(h23, r12).degree() == 0;
        c.pass = shape && through && elsewhere;
        c.detail = "C1.C3 " + multiset_text(multiset(r13)) + ", C2.C3 " +
                   multiset_text(multiset(r23));
        rep.clauses.push_back(c);
    }
    {
        CombClause c{"line tangent to C1 and C2"};
        c.pass = multiset(rl1) == std::vector<int>{2} &&
                 multiset(rl2) == std::vector<int>{2};
        c.detail = "C1.L " + multiset_text(multiset(rl1)) + ", C2.L " +
                   multiset_text(multiset(rl2));
        rep.clauses.push_back(c);
    }
    {
        CombClause c{"line transversal to C3"};
        c.pass = multiset(rl3) == std::vector<int>{1, 1};
        c.detail = "C3.L " + multiset_text(multiset(rl3));
        rep.clauses.push_back(c);
    }
    rep.pass = std::all_of(rep.clauses.begin(), rep.clauses.end(),
                           [](const CombClause& c) { return c.pass; });
    return rep;
}

CurvePoint chord_point(const WeierstrassCurve& curve, const Rational& ti,
                       const Rational& tj) {
    UniPoly<Rational> chord{std::vector<Rational>{-(ti * tj), ti + tj}};
    RationalFunction fx = curve.eval_F(RationalFunction(chord));
    if (!fx.is_polynomial())
        throw domain_error("chord substitution is not polynomial");
    UniPoly<Rational> rooti{std::vector<Rational>{-ti, Rational(1)}};
    UniPoly<Rational> rootj{std::vector<Rational>{-tj, Rational(1)}};
    UniPoly<Rational> sq = rooti * rooti * rootj * rootj;
    UniPoly<Rational> num = fx.as_polynomial();
    auto [q, r] = divrem(num, sq);
    if (!r.is_zero() || q.degree() != 0)
        throw domain_error("F along the chord is not c*(t-ti)^2*(t-tj)^2");
    Rational c = q[0];
    if (!c.is_square())
        throw domain_error("chord scale is not a rational square");
    Rational d = -c.sqrt(); // negative root by convention
    UniPoly<Rational> y = d * (rooti * rootj);
    CurvePoint p = CurvePoint::affine(RationalFunction(chord), RationalFunction(y));
    curve.require_on_curve(p);
    return p;
}

RationalFunction weak_contact_x(const WeierstrassCurve& curve, const CurvePoint& p_ik,
                                const CurvePoint& p_kj, int sign) {
    if (sign != 1 && sign != -1) throw domain_error("sign must be +1 or -1");
    curve.require_on_curve(p_ik);
    curve.require_on_curve(p_kj);
    if (p_ik.infinity || p_kj.infinity) throw domain_error("affine points required");
    if (p_ik.x == p_kj.x)
        throw domain_error("equal x-coordinates: use the group-law route");
    RationalFunction lam =
        (RationalFunction((long)sign) * p_kj.y - p_ik.y) / (p_kj.x - p_ik.x);
    RationalFunction c2 = curve.F()[2];
    return lam * lam - c2 - p_ik.x - p_kj.x;
}

bool smooth_conic(const MultiPoly<Rational>& poly) {
    if (poly.degree() != 2) throw domain_error("not a conic");
    auto c = [&](int et, int ex) {
        Monomial m{et, ex};
        return poly.coeff(m);
    };
    Rational half(1, 2);
    // symmetric matrix of the homogenized quadratic form in (t, x, z)
    Rational a = c(2, 0), b = c(0, 2), f = c(0, 0);
    Rational d = half * c(1, 1), e = half * c(1, 0), g = half * c(0, 1);
    Rational det = a * (b * f - g * g) - d * (d * f - g * e) + e * (d * g - b * e);
    return !det.is_zero();
}

} // namespace cla
