#include <cla/families.hpp>

#include <cla/parser.hpp>

#include <map>

namespace cla {

namespace {

struct FamilyDef {
    std::string param;
    std::string text;
};

const std::map<FamilyName, FamilyDef>& family_defs() {
    static const std::map<FamilyName, FamilyDef> defs{
        {FamilyName::C3a,
         {"a",
          "(4*a^2+8*a)*t^2 + (8*a+4)*x^2 + (-12*a^2-12*a-12)*x - 27*a^2 - 54*a"}},
        {FamilyName::C3pa,
         {"a",
          "(4*a^2-4)*t^2 + (-4*a^2-16*a-4)*t*x + (-4*a^2+4)*x^2 + "
          "(-24*a^2-24*a-24)*x - 27*a^2 + 27"}},
        {FamilyName::C2b,
         {"b",
          "-27*b^4-54*b^3-81*b^2-54*b-27 + (8*b^4+16*b^3-24*b^2-32*b-4)*t*x + "
          "(4*b^4+8*b^3+12*b^2+8*b+4)*t^2 + (4*b^4+8*b^3+12*b^2+8*b+4)*x^2"}},
        {FamilyName::L1b, {"b", "(b^2+2*b)*t + (b^2-1)*x + 3*b^2+3*b+3"}},
        {FamilyName::L2b, {"b", "(b^2+2*b)*t + (b^2-1)*x - 3*b^2-3*b-3"}},
        {FamilyName::L3b, {"b", "(b^2-1)*t + (b^2+2*b)*x + 3*b^2+3*b+3"}},
        {FamilyName::L4b, {"b", "(b^2-1)*t + (b^2+2*b)*x - 3*b^2-3*b-3"}},
        {FamilyName::D3b,
         {"b",
          "(-20*b^2+24*b+32)*t^2 + (-52*b^2-104*b)*t*x + (-32*b^2-24*b+20)*x^2 + "
          "(-84*b^2-336*b-84)*x + 135*b^2-162*b-216"}},
    };
    return defs;
}

UniPoly<Rational> up(std::initializer_list<long> coeffs_low_first) {
    std::vector<Rational> v;
    for (long c : coeffs_low_first) v.emplace_back(c);
    return UniPoly<Rational>(std::move(v));
}

PlaneCurve make_curve(const std::string& text, const std::string& label,
                      CurveKind kind) {
    PlaneCurve c;
    c.poly = parse_poly(text, plane_vars());
    c.label = label;
    c.kind = kind;
    return c;
}

} // namespace

FamilyName family_from_string(const std::string& name) {
    static const std::map<std::string, FamilyName> m{
        {"C3a", FamilyName::C3a}, {"C3pa", FamilyName::C3pa},
        {"C2b", FamilyName::C2b}, {"L1b", FamilyName::L1b},
        {"L2b", FamilyName::L2b}, {"L3b", FamilyName::L3b},
        {"L4b", FamilyName::L4b}, {"D3b", FamilyName::D3b}};
    auto it = m.find(name);
    if (it == m.end()) throw domain_error("unknown family '" + name + "'");
    return it->second;
}

std::string family_to_string(FamilyName name) {
    switch (name) {
        case FamilyName::C3a: return "C3a";
        case FamilyName::C3pa: return "C3pa";
        case FamilyName::C2b: return "C2b";
        case FamilyName::L1b: return "L1b";
        case FamilyName::L2b: return "L2b";
        case FamilyName::L3b: return "L3b";
        case FamilyName::L4b: return "L4b";
        case FamilyName::D3b: return "D3b";
    }
    throw domain_error("unknown family");
}

PlaneCurve family_eval(FamilyName name, const Rational& param,
                       bool allow_degenerate) {
    if (!allow_degenerate && is_degenerate_param(name, param))
        throw domain_error("degenerate parameter for family " +
                           family_to_string(name));
    const FamilyDef& def = family_defs().at(name);
    std::vector<std::string> vars{def.param, "t", "x"};
    MultiPoly<Rational> generic = parse_poly(def.text, vars);
    MultiPoly<Rational> at = generic.specialize(def.param, param).drop_var(def.param);
    if (at.is_zero()) throw domain_error("family member vanishes identically");
    PlaneCurve c;
    c.poly = std::move(at);
    c.label = family_to_string(name);
    c.kind = c.poly.degree() >= 2 ? CurveKind::conic : CurveKind::line;
    return c;
}

std::vector<DegenerateCondition> degenerate_params(FamilyName name) {
    std::vector<DegenerateCondition> out;
    auto rational_value = [&](long num, long den, const std::string& note) {
        std::vector<Rational> v{Rational(-num, den), Rational(1)};
        out.push_back({UniPoly<Rational>(std::move(v)), note});
    };
    switch (name) {
        case FamilyName::C3a:
        case FamilyName::C3pa:
            rational_value(-2, 1, "tangent line at the base point is a bitangent");
            rational_value(-1, 1, "tangent line at the base point is a bitangent");
            rational_value(0, 1, "tangent line at the base point is a bitangent");
            rational_value(1, 1, "tangent line at the base point is a bitangent");
            out.push_back({up({1, 4, 1}), "tangency point meets an intersection point"});
            out.push_back({up({-2, -2, 1}), "tangency point meets an intersection point"});
            break;
        case FamilyName::C2b:
        case FamilyName::L1b:
        case FamilyName::L2b:
        case FamilyName::L3b:
        case FamilyName::L4b:
            out.push_back({up({1, 4, 1}), "conic coincides with C1"});
            out.push_back({up({-2, -2, 1}), "conic coincides with C1"});
            out.push_back({up({1, 1, 1}), "conic becomes singular"});
            break;
        case FamilyName::D3b:
            rational_value(2, 1, "conic becomes singular");
            rational_value(-4, 5, "conic becomes singular");
            out.push_back({up({-2, -2, 1}), "conic becomes singular"});
            break;
    }
    return out;
}

bool is_degenerate_param(FamilyName name, const Rational& param) {
    for (const auto& cond : degenerate_params(name))
        if (cond.minpoly.eval(param).is_zero()) return true;
    return false;
}

PlaneCurve symmetric_C1() {
    return make_curve("t^2 + x^2 + t*x - 27/4", "C1", CurveKind::conic);
}

PlaneCurve symmetric_C2() {
    return make_curve("t^2 + x^2 - t*x - 27/4", "C2", CurveKind::conic);
}

PlaneCurve symmetric_L(int i) {
    switch (i) {
        case 1: return make_curve("t - 3", "L1", CurveKind::line);
        case 2: return make_curve("t + 3", "L2", CurveKind::line);
        case 3: return make_curve("x - 3", "L3", CurveKind::line);
        case 4: return make_curve("x + 3", "L4", CurveKind::line);
    }
    throw domain_error("line index out of range");
}

Table1Report table1_check() {
    Table1Report rep;
    rep.pass = true;

    std::vector<MultiPoly<Rational>> ref_lines;
    for (int i = 1; i <= 4; ++i)
        ref_lines.push_back(integer_primitive(symmetric_L(i).poly));
    MultiPoly<Rational> c32 = integer_primitive(family_eval(FamilyName::C3a, Rational(2)).poly);
    MultiPoly<Rational> c32p = integer_primitive(family_eval(FamilyName::C3pa, Rational(2)).poly);

    const std::vector<std::pair<long, std::array<std::string, 5>>> printed{
        {-2, {"L2", "L1", "L4", "L3", "C3a@2"}},
        {-1, {"L3", "L4", "L1", "L2", "C3pa@2"}},
        {0, {"L1", "L2", "L3", "L4", "C3a@2"}},
        {1, {"L4", "L3", "L2", "L4", "C3pa@2"}},
    };
    const std::array<FamilyName, 4> line_fams{FamilyName::L1b, FamilyName::L2b,
                                              FamilyName::L3b, FamilyName::L4b};

    for (const auto& [bval, row] : printed) {
        Table1Column col;
        col.b = Rational(bval);
        for (int k = 0; k < 4; ++k) col.printed[k] = row[k];
        col.printed_D = row[4];

        std::vector<bool> hit(4, false);
        bool all_found = true;
        for (int k = 0; k < 4; ++k) {
            MultiPoly<Rational> p = integer_primitive(
                family_eval(line_fams[k], col.b, /*allow_degenerate=*/true).poly);
            col.found[k] = "?";
            for (int i = 0; i < 4; ++i)
                if (p == ref_lines[i]) {
                    col.found[k] = "L" + std::to_string(i + 1);
                    hit[i] = true;
                }
            if (col.found[k] == "?") all_found = false;
        }
        col.set_equal = all_found &&
                        std::all_of(hit.begin(), hit.end(), [](bool h) { return h; });

        MultiPoly<Rational> d = integer_primitive(
            family_eval(FamilyName::D3b, col.b, /*allow_degenerate=*/true).poly);
        if (d == c32) col.found_D = "C3a@2";
        else if (d == c32p) col.found_D = "C3pa@2";
        else col.found_D = "?";
        col.d_ok = col.found_D == col.printed_D;

        col.perm_matches = true;
        for (int k = 0; k < 4; ++k)
            if (col.found[k] != col.printed[k]) col.perm_matches = false;

        rep.pass = rep.pass && col.set_equal && col.d_ok;
        rep.columns.push_back(std::move(col));
    }
    return rep;
}

} // namespace cla
