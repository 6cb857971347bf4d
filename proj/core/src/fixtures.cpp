#include <cla/fixtures.hpp>

#include <cla/parser.hpp>

#include <nlohmann/json.hpp>

namespace cla {

using json = nlohmann::json;

const CurvePoint& QuarticFixture::point(const std::string& name) const {
    for (const auto& [n, p] : points)
        if (n == name) return p;
    throw domain_error("unknown point '" + name + "'");
}

const Section& LatticeFixture::section(const std::string& name) const {
    for (const auto& s : sections)
        if (s.name == name) return s;
    throw domain_error("unknown section '" + name + "'");
}

namespace {

CurvePoint pt(const std::string& x, const std::string& y) {
    return CurvePoint::affine(parse_ratfunc(x), parse_ratfunc(y));
}

PlaneCurve component(const std::string& label, CurveKind kind,
                     const std::string& poly) {
    return PlaneCurve{integer_primitive(parse_poly(poly, plane_vars())), label, kind};
}

const char* line_poly(int i) {
    switch (i) {
        case 1: return "25*x - 160*t + 256";
        case 2: return "x";
        case 3: return "x - 10*t + 25";
        case 4: return "25*x - 90*t + 81";
    }
    throw domain_error("line index out of range");
}

} // namespace

QuarticFixture builtin_quartic(const std::string& name) {
    if (name != "ref-Q") throw domain_error("unknown quartic fixture '" + name + "'");
    QuarticFixture f{
        WeierstrassCurve::from_factored(parse_unipoly("-10*t + 25"),
                                        parse_unipoly("-36")),
        {
            {"P12", pt("5*t - 6", "-5*t^2 + 25*t - 30")},
            {"P23", pt("8*t - 12", "-4*t^2 + 32*t - 48")},
            {"P31", pt("9*t - 18", "-3*t^2 + 27*t - 54")},
            {"T", pt("t^2", "0")},
            {"Q0", pt("5/4*t^2 - 2*t + 3", "5/8*t^3 - 6*t^2 + 31/2*t - 12")},
            {"Q0'", pt("5*t^2 - 32*t + 48", "10*t^3 - 114*t^2 + 392*t - 408")},
            {"Q1", pt("32/5*t - 256/25", "24/5*t^2 - 726/25*t + 5472/125")},
            {"Q2", pt("0", "-6*t")},
            {"Q3", pt("10*t - 25", "6*t - 30")},
            {"Q4", pt("18/5*t - 81/25", "24/5*t^2 - 474/25*t + 2322/125")},
        }};
    for (const auto& [n, p] : f.points) f.curve.require_on_curve(p);
    return f;
}

Arrangement builtin_arrangement(const std::string& name) {
    if (name == "symmetric-Q") {
        // the symmetric model: two conics exchanged by (t, x) -> (x, t),
        // a weak contact conic from the a-family at a = 2, and a bitangent
        return Arrangement{{
            component("C1", CurveKind::conic, "t^2 + x^2 + t*x - 27/4"),
            component("C2", CurveKind::conic, "t^2 + x^2 - t*x - 27/4"),
            component("C3", CurveKind::conic,
                      "32*t^2 + 20*x^2 - 84*x - 216"), // a-family at a = 2
            component("L", CurveKind::line, "t - 3"),
        }};
    }
    if (name.rfind("ref-C", 0) == 0 && name.size() == 6) {
        int i = name[5] - '0';
        if (i >= 1 && i <= 4)
            return Arrangement{{
                component("C1", CurveKind::conic, "x - t^2"),
                component("C2", CurveKind::conic, "x^2 - 10*t*x + 25*x - 36"),
                component("C3", CurveKind::conic, "4*x - 5*t^2 + 8*t - 12"),
                component("L" + std::to_string(i), CurveKind::line, line_poly(i)),
            }};
    }
    throw domain_error("unknown arrangement fixture '" + name + "'");
}

LatticeFixture builtin_lattice(const std::string& name) {
    if (name != "ref-MW")
        throw domain_error("unknown lattice fixture '" + name + "'");
    LatticeFixture f;
    f.basis.names = {"s12", "s23", "s31"};
    Rational h(1, 2);
    f.basis.gram = {{h, Rational(0), Rational(0)},
                    {Rational(0), h, Rational(0)},
                    {Rational(0), Rational(0), h}};
    f.basis.chi = 1;
    f.fibers.fibers = {{"1", 2}, {"2", 2}, {"3", 2}, {"4", 2}, {"inf", 2}};
    // Incidences not spelled out in the source table are the identity
    // component (the only consistent completion): every section meets
    // exactly one component per fiber and the sO and height data pin the
    // rest down.
    auto section = [](std::string n, std::vector<long> c,
                      std::map<std::string, int> inc) {
        Section s;
        s.name = std::move(n);
        s.combo.coefficients = std::move(c);
        s.sO = 0;
        s.incidence = std::move(inc);
        return s;
    };
    f.sections = {
        section("Q0", {1, 0, 1},
                {{"1", 0}, {"2", 1}, {"3", 1}, {"4", 0}, {"inf", 0}}),
        section("Q1", {1, 1, 1},
                {{"1", 0}, {"2", 0}, {"3", 0}, {"4", 0}, {"inf", 1}}),
        section("Q2", {1, -1, 1},
                {{"1", 0}, {"2", 0}, {"3", 0}, {"4", 0}, {"inf", 1}}),
        section("Q3", {1, 1, -1},
                {{"1", 0}, {"2", 0}, {"3", 0}, {"4", 0}, {"inf", 1}}),
        section("Q4", {1, -1, -1},
                {{"1", 0}, {"2", 0}, {"3", 0}, {"4", 0}, {"inf", 1}}),
    };
    return f;
}

namespace {

Pi1Fixture make_pi1(bool first) {
    // generator delta corresponds to the line; relators 7-13 differ
    // between the two arrangements, the rest share the same shape
    std::string d = first ? "delta1" : "delta3";
    std::vector<std::string> gens{"alpha", "alpha'", "beta",  "beta'",
                                  "gamma", "gamma'", d};
    std::vector<std::string> rel;
    rel.push_back("alpha alpha'^-1");
    rel.push_back("alpha' beta alpha'^-1 beta'^-1");
    rel.push_back("beta' alpha' gamma alpha'^-1 beta'^-1 gamma'^-1");
    rel.push_back("[alpha', beta' gamma']");
    rel.push_back("[beta', gamma' alpha']");
    rel.push_back("{beta, gamma}");
    if (first) {
        rel.push_back("[gamma', " + d + "]");
        rel.push_back("{beta', " + d + "}");
        rel.push_back("[" + d + "^-1 alpha' " + d + ", beta']");
        rel.push_back("{alpha', " + d + "}");
        rel.push_back("[beta' alpha' " + d + " alpha'^-1 beta'^-1, gamma']");
        rel.push_back("[beta'^-1 gamma' beta', alpha' beta']");
        rel.push_back("[alpha', gamma' beta']");
    } else {
        rel.push_back("[alpha', beta']");
        rel.push_back("[gamma', " + d + "]");
        rel.push_back("{beta' alpha' beta'^-1, " + d + "}");
        rel.push_back("[beta' alpha' beta'^-1 " + d + " beta' alpha'^-1 beta'^-1, gamma']");
        rel.push_back("[beta'^-1 gamma' beta', alpha' beta'^-1 " + d + "^-1 beta' " +
                      d + " beta']");
        rel.push_back("[alpha', beta'^-1 " + d + "^-1 beta' " + d + " gamma' beta']");
        rel.push_back("{beta', " + d + "}");
    }
    rel.push_back("{beta'^-1 gamma' beta', alpha'}");
    rel.push_back("beta' alpha'^-1 beta'^-1 gamma'^-1 " + d +
                  "^-1 beta gamma beta^-1 " + d +
                  " gamma' beta' alpha' beta'^-1 gamma'^-1");
    rel.push_back("[beta'^-1 gamma'^-1 beta' alpha'^-1 beta'^-1 gamma'^-1 " + d +
                  "^-1 beta gamma beta gamma^-1 beta^-1 " + d +
                  " gamma' beta' alpha' beta'^-1 gamma' beta', alpha']");
    rel.push_back("beta'^-1 gamma'^-1 beta' alpha'^-1 beta'^-1 gamma'^-1 " + d +
                  "^-1 beta gamma beta^-1 gamma^-1 beta^-1 alpha beta gamma beta "
                  "gamma^-1 beta^-1 " + d +
                  " gamma' beta' alpha' beta'^-1 gamma' beta' alpha'^-1");
    rel.push_back("gamma' beta' alpha' beta'^-1 gamma'^-1 beta' alpha'^-1 beta'^-1 "
                  "gamma'^-1 " + d + "^-1 beta gamma beta gamma^-1 beta^-1 " + d +
                  " gamma' beta' alpha' beta'^-1 gamma' beta' alpha'^-1 beta'^-1 "
                  "gamma'^-1 beta'^-1");
    rel.push_back(d + " gamma' beta' alpha' alpha beta gamma");

    Pi1Fixture f;
    f.presentation.generators = gens;
    for (const auto& r : rel)
        f.presentation.relators.push_back(parse_word(r, gens));
    f.script = parse_script("eliminate alpha' 0\n"
                            "eliminate beta' 0\n"
                            "eliminate gamma' 0\n"
                            "eliminate " + d + " 15\n"
                            "autoreduce\n"
                            "derive [alpha, beta]\n"
                            "derive [alpha, gamma]\n"
                            "derive [beta, gamma]\n"
                            "autoreduce\n"
                            "drop_consequences\n");
    return f;
}

} // namespace

Pi1Fixture builtin_pi1(const std::string& name) {
    if (name == "pi1-C1") return make_pi1(true);
    if (name == "pi1-C3") return make_pi1(false);
    throw domain_error("unknown presentation fixture '" + name + "'");
}

std::vector<std::string> builtin_fixture_names() {
    return {"ref-Q",  "ref-C1", "ref-C2", "ref-C3", "ref-C4",
            "symmetric-Q", "ref-MW", "pi1-C1",   "pi1-C3"};
}

// ---------------------------------------------------------------------------
// JSON loaders

QuarticFixture parse_quartic_fixture(const std::string& json_text) {
    json j = json::parse(json_text);
    QuarticFixture f{
        WeierstrassCurve::from_factored(
            parse_unipoly(j.at("curve").at("a1").get<std::string>()),
            parse_unipoly(j.at("curve").at("a2").get<std::string>())),
        {}};
    for (const auto& [name, xy] : j.at("points").items()) {
        f.points.emplace_back(name, pt(xy.at(0).get<std::string>(),
                                       xy.at(1).get<std::string>()));
        f.curve.require_on_curve(f.points.back().second);
    }
    return f;
}

Arrangement parse_arrangement_fixture(const std::string& json_text) {
    json j = json::parse(json_text);
    Arrangement arr;
    for (const auto& c : j.at("components")) {
        std::string kind = c.at("kind").get<std::string>();
        CurveKind k;
        if (kind == "line")
            k = CurveKind::line;
        else if (kind == "conic")
            k = CurveKind::conic;
        else
            throw domain_error("unknown component kind '" + kind + "'");
        arr.components.push_back(component(c.at("label").get<std::string>(), k,
                                           c.at("poly").get<std::string>()));
    }
    return arr;
}

LatticeFixture parse_lattice_fixture(const std::string& json_text) {
    json j = json::parse(json_text);
    LatticeFixture f;
    f.basis.chi = j.at("chi").get<int>();
    for (const auto& n : j.at("basis")) f.basis.names.push_back(n.get<std::string>());
    for (const auto& row : j.at("gram")) {
        f.basis.gram.emplace_back();
        for (const auto& e : row)
            f.basis.gram.back().push_back(Rational(mpq_class(e.get<std::string>())));
    }
    for (const auto& fb : j.at("fibers"))
        f.fibers.fibers.push_back(
            {fb.at("id").get<std::string>(), fb.at("n").get<int>()});
    for (const auto& [name, s] : j.at("sections").items()) {
        Section sec;
        sec.name = name;
        for (const auto& c : s.at("coeffs"))
            sec.combo.coefficients.push_back(c.get<long>());
        sec.sO = s.at("sO").get<int>();
        for (const auto& [fid, comp] : s.at("incidence").items())
            sec.incidence[fid] = comp.get<int>();
        f.sections.push_back(std::move(sec));
    }
    return f;
}

Pi1Fixture parse_pi1_fixture(const std::string& json_text) {
    json j = json::parse(json_text);
    Pi1Fixture f;
    for (const auto& g : j.at("generators"))
        f.presentation.generators.push_back(g.get<std::string>());
    for (const auto& r : j.at("relators"))
        f.presentation.relators.push_back(
            parse_word(r.get<std::string>(), f.presentation.generators));
    if (j.contains("script")) {
        std::string text;
        for (const auto& m : j.at("script")) text += m.get<std::string>() + "\n";
        f.script = parse_script(text);
    }
    return f;
}

} // namespace cla
