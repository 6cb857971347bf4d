#include <cla/reproduce.hpp>

#include <cla/arrangement.hpp>
#include <cla/families.hpp>
#include <cla/fixtures.hpp>
#include <cla/parser.hpp>
#include <cla/splitting.hpp>

#include <algorithm>
#include <set>
#include <sstream>

namespace cla {

namespace {

std::string print_point(const CurvePoint& p) {
    if (p.infinity) return "O";
    return "(" + print_ratfunc(p.x) + ", " + print_ratfunc(p.y) + ")";
}

std::string print_basis(const std::vector<MultiPoly<Rational>>& elements) {
    std::vector<std::string> parts;
    for (const auto& e : elements) parts.push_back(print_poly(integer_primitive(e)));
    std::sort(parts.begin(), parts.end());
    std::string out = "{";
    for (std::size_t i = 0; i < parts.size(); ++i)
        out += (i ? ", " : "") + parts[i];
    return out + "}";
}

std::string print_type(const SplittingType& t) {
    return "(" + std::to_string(t.m1) + ", " + std::to_string(t.m2) + ")";
}

void check(ReproReport& rep, std::string id, std::string group, std::string expected,
           std::string computed) {
    bool ok = expected == computed;
    rep.checks.push_back(
        {std::move(id), std::move(group), std::move(expected), std::move(computed), ok});
}

void run_construction(ReproReport& rep) {
    auto f = builtin_quartic("ref-Q");
    std::vector<CurvePoint> gens{f.point("P12"), f.point("P23"), f.point("P31")};
    struct Combo {
        const char* name;
        std::vector<int> coeffs;
        const char* x;
        const char* y;
    };
    // coefficients are taken against the lattice generators, which are
    // s12 = -P12, s23 = P23, s31 = -P31 for the fixture's y-scale choices
    const Combo combos[] = {
        {"Q0", {-1, 0, -1}, "5/4*t^2 - 2*t + 3", "5/8*t^3 - 6*t^2 + 31/2*t - 12"},
        {"Q0'", {-1, 0, 1}, "5*t^2 - 32*t + 48", "10*t^3 - 114*t^2 + 392*t - 408"},
        {"Q1", {-1, 1, -1}, "32/5*t - 256/25", "24/5*t^2 - 726/25*t + 5472/125"},
        {"Q2", {-1, -1, -1}, "0", "-6*t"},
        {"Q3", {-1, 1, 1}, "10*t - 25", "6*t - 30"},
        {"Q4", {-1, -1, 1}, "18/5*t - 81/25", "24/5*t^2 - 474/25*t + 2322/125"},
    };
    for (const auto& c : combos) {
        CurvePoint sum = linear_combination(f.curve, gens, c.coeffs);
        CurvePoint want = CurvePoint::affine(parse_ratfunc(c.x), parse_ratfunc(c.y));
        check(rep, std::string("point-") + c.name, "construction", print_point(want),
              print_point(sum));
    }
    const std::pair<const char*, const char*> curves[] = {
        {"Q0", "4*x - 5*t^2 + 8*t - 12"},   {"Q0'", "x - 5*t^2 + 32*t - 48"},
        {"Q1", "25*x - 160*t + 256"},       {"Q2", "x"},
        {"Q3", "x - 10*t + 25"},            {"Q4", "25*x - 90*t + 81"},
    };
    for (const auto& [name, poly] : curves) {
        PlaneCurve pc = curve_from_point(f.point(name));
        check(rep, std::string("curve-") + name, "construction",
              print_poly(integer_primitive(parse_poly(poly, plane_vars()))),
              print_poly(integer_primitive(pc.poly)));
    }
}

void run_splitting(ReproReport& rep) {
    auto f = builtin_quartic("ref-Q");
    auto lat = builtin_lattice("ref-MW");
    struct Golden {
        const char* name;
        std::vector<const char*> plus, minus;
        SplittingType type;
    };
    const Golden golden[] = {
        {"Q1",
         {"1"},
         {"125*t^2 - 840*t + 1324", "625*y + 2010*t - 4416", "25*x - 160*t + 256"},
         {0, 2}},
        {"Q2", {"1"}, {"5*t^2 - 8*t + 12", "y - 6*t", "x"}, {0, 2}},
        {"Q3", {"t - 4", "y + 6", "x - 15"}, {"5*t - 28", "5*y + 18", "x - 31"}, {1, 1}},
        {"Q4",
         {"25*t - 52", "3125*y + 294", "125*x - 531"},
         {"5*t - 12", "25*y + 18", "5*x - 27"},
         {1, 1}},
    };
    const CurvePoint& q0 = f.point("Q0");
    for (const auto& g : golden) {
        SplittingResult res = splitting_type_via_groebner(q0, f.point(g.name));
        auto golden_basis = [](const std::vector<const char*>& texts) {
            std::vector<MultiPoly<Rational>> v;
            for (const char* s : texts) v.push_back(parse_poly(s, cover_vars()));
            return print_basis(v);
        };
        check(rep, std::string("gb-") + g.name + "-plus", "splitting",
              golden_basis(g.plus), print_basis(res.basis_plus.elements));
        check(rep, std::string("gb-") + g.name + "-minus", "splitting",
              golden_basis(g.minus), print_basis(res.basis_minus.elements));
        check(rep, std::string("type-") + g.name, "splitting", print_type(g.type),
              print_type(res.type));
        SplittingType via_lattice = splitting_type_via_lattice(
            lat.basis, lat.fibers, lat.section("Q0"), lat.section(g.name), 2);
        check(rep, std::string("route-") + g.name, "splitting", print_type(res.type),
              print_type(via_lattice));
    }
}

void run_lattice(ReproReport& rep) {
    auto lat = builtin_lattice("ref-MW");
    const std::pair<const char*, const char*> heights[] = {
        {"Q1", "1"}, {"Q2", "1"}, {"Q3", "0"}, {"Q4", "0"}};
    for (const auto& [name, want] : heights)
        check(rep, std::string("height-Q0-") + name, "lattice", want,
              height(lat.basis, lat.section("Q0").combo, lat.section(name).combo)
                  .str());
    const std::pair<const char*, const char*> inters[] = {
        {"Q1", "0"}, {"Q2", "0"}, {"Q3", "1"}, {"Q4", "1"}};
    for (const auto& [name, want] : inters)
        check(rep, std::string("intersection-Q0-") + name, "lattice", want,
              std::to_string(section_intersection(lat.basis, lat.fibers,
                                                  lat.section("Q0"),
                                                  lat.section(name))));
}

std::string comb_summary(const CombReport& rep) {
    if (rep.pass) return "PASS";
    std::string s = "FAIL:";
    for (const auto& c : rep.clauses)
        if (!c.pass) s += " " + c.name;
    return s;
}

void run_comb(ReproReport& rep) {
    for (const char* name :
         {"ref-C1", "ref-C2", "ref-C3", "ref-C4", "symmetric-Q"})
        check(rep, std::string("comb-") + name, "comb", "PASS",
              comb_summary(verify_comb(builtin_arrangement(name))));
}

void run_families(ReproReport& rep) {
    Table1Report t = table1_check();
    for (const auto& col : t.columns) {
        std::ostringstream id;
        id << "table1-b=" << col.b.str();
        std::string computed = std::string("set:") + (col.set_equal ? "yes" : "no") +
                               " D:" + (col.d_ok ? "yes" : "no");
        check(rep, id.str(), "families", "set:yes D:yes", computed);
        if (!col.perm_matches) {
            // informational: the printed row order differs from the
            // computed matching; the set-level identity still holds
            std::string found, printed;
            for (int i = 0; i < 4; ++i) {
                found += (i ? "," : "") + col.found[i];
                printed += (i ? "," : "") + col.printed[i];
            }
            rep.checks.push_back({"table1-order-b=" + col.b.str(), "families",
                                  "row order " + printed, "matched order " + found,
                                  true});
        }
    }
}

void run_pi1(ReproReport& rep) {
    for (const char* name : {"pi1-C1", "pi1-C3"}) {
        Pi1Fixture f = builtin_pi1(name);
        AbelianInvariants inv = abelianize(f.presentation);
        std::string ab = "Z^" + std::to_string(inv.rank);
        for (const auto& d : inv.invariant_factors) ab += " x Z/" + d.get_str();
        check(rep, std::string("abelianization-") + name, "pi1", "Z^3", ab);
        std::string verdict;
        try {
            SimplifyOutcome out = verify_simplification(f.presentation, f.script);
            verdict = out.pass ? "PASS" : "FAIL";
        } catch (const std::exception& e) {
            verdict = std::string("ERROR: ") + e.what();
        }
        check(rep, std::string("script-") + name, "pi1", "PASS", verdict);
    }
}

} // namespace

ReproReport reproduce(const std::string& scope) {
    static const std::set<std::string> known{
        "all", "construction", "families", "splitting", "lattice", "comb", "pi1"};
    if (!known.count(scope)) throw domain_error("unknown scope '" + scope + "'");
    ReproReport rep;
    bool all = scope == "all";
    if (all || scope == "construction") run_construction(rep);
    if (all || scope == "families") run_families(rep);
    if (all || scope == "splitting") run_splitting(rep);
    if (all || scope == "lattice") run_lattice(rep);
    if (all || scope == "comb") run_comb(rep);
    if (all || scope == "pi1") run_pi1(rep);
    return rep;
}

} // namespace cla
