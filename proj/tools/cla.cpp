// Command-line front end: runs each pipeline on built-in or external
// fixtures and prints canonical text or structured JSON reports.
#include <cla/families.hpp>
#include <cla/fixtures.hpp>
#include <cla/parser.hpp>
#include <cla/reproduce.hpp>
#include <cla/splitting.hpp>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace cla;
using json = nlohmann::ordered_json;

namespace {

constexpr const char* kSchema = "cla-report-1";

struct Options {
    std::string format = "text";
    std::string fixture;
};

[[noreturn]] void usage_error(const std::string& msg) {
    std::cerr << "error: " << msg << "\n";
    std::exit(2);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) usage_error("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

/// Resolves a fixture argument: an existing file path, a file in the
/// directory named by CLA_FIXTURE_PATH, or a built-in name (empty text).
std::string fixture_text(const std::string& name) {
    if (std::ifstream(name).good()) return read_file(name);
    if (const char* dir = std::getenv("CLA_FIXTURE_PATH")) {
        for (std::string cand : {std::string(dir) + "/" + name,
                                 std::string(dir) + "/" + name + ".json"})
            if (std::ifstream(cand).good()) return read_file(cand);
    }
    return {};
}

QuarticFixture quartic_fixture(const Options& opt) {
    std::string name = opt.fixture.empty() ? "ref-Q" : opt.fixture;
    std::string text = fixture_text(name);
    return text.empty() ? builtin_quartic(name) : parse_quartic_fixture(text);
}

std::string point_text(const CurvePoint& p) {
    if (p.infinity) return "O";
    return "(" + print_ratfunc(p.x) + ", " + print_ratfunc(p.y) + ")";
}

std::string unipoly_qt_text(const UniPoly<RationalFunction>& p,
                            const std::string& var) {
    if (p.is_zero()) return "0";
    std::string out;
    for (int i = p.degree(); i >= 0; --i) {
        if (p[i].is_zero()) continue;
        if (!out.empty()) out += " + ";
        out += "(" + print_ratfunc(p[i]) + ")";
        if (i >= 1) out += "*" + var;
        if (i >= 2) out += "^" + std::to_string(i);
    }
    return out;
}

std::string multipoly_qt_text(const MultiPoly<RationalFunction>& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (const auto& [m, c] : p.terms()) {
        if (!out.empty()) out += " + ";
        out += "(" + print_ratfunc(c) + ")";
        for (std::size_t v = 0; v < p.vars().size(); ++v) {
            if (m[v] == 0) continue;
            out += "*" + p.vars()[v];
            if (m[v] > 1) out += "^" + std::to_string(m[v]);
        }
    }
    return out;
}

void emit(const Options& opt, const json& structured, const std::string& text) {
    if (opt.format == "structured") {
        json j = structured;
        j["schema"] = kSchema;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << text;
    }
}

// ---------------------------------------------------------------------------

int cmd_add(const Options& opt, const std::vector<std::string>& terms) {
    QuarticFixture f = quartic_fixture(opt);
    std::vector<CurvePoint> pts;
    std::vector<int> coeffs;
    int sign = 1;
    for (const auto& tok : terms) {
        if (tok == "+") { sign = 1; continue; }
        if (tok == "-") { sign = -1; continue; }
        std::string name = tok;
        int s = sign;
        if (name[0] == '+' || name[0] == '-') {
            if (name[0] == '-') s = -sign;
            name = name.substr(1);
        }
        pts.push_back(f.point(name));
        coeffs.push_back(s);
        sign = 1;
    }
    if (pts.empty()) usage_error("add needs at least one point");
    CurvePoint sum = linear_combination(f.curve, pts, coeffs);
    json j{{"command", "add"}, {"result", point_text(sum)}};
    emit(opt, j, point_text(sum) + "\n");
    return 0;
}

int cmd_mumford(const Options& opt, const std::vector<std::string>& names,
                bool via_groebner) {
    QuarticFixture f = quartic_fixture(opt);
    SemiReducedDivisor d;
    for (const auto& n : names) {
        const CurvePoint& p = f.point(n);
        bool merged = false;
        for (auto& [q, m] : d.support)
            if (q == p) { ++m; merged = true; }
        if (!merged) d.support.push_back({p, 1});
    }
    d.validate(f.curve);
    MumfordPair mp = mumford_of_divisor(f.curve, d);
    std::string text = "u = " + unipoly_qt_text(mp.u, "x") + "\n" +
                       "v = " + unipoly_qt_text(mp.v, "x") + "\n";
    json j{{"command", "mumford"},
           {"u", unipoly_qt_text(mp.u, "x")},
           {"v", unipoly_qt_text(mp.v, "x")}};
    if (via_groebner) {
        auto gb = mumford_via_groebner(f.curve, d);
        json basis = json::array();
        text += "basis:\n";
        for (const auto& e : gb.elements) {
            basis.push_back(multipoly_qt_text(e));
            text += "  " + multipoly_qt_text(e) + "\n";
        }
        j["basis"] = basis;
    }
    emit(opt, j, text);
    return 0;
}

int cmd_groebner(const Options& opt, const std::string& file,
                 const std::string& order_spec) {
    json in = json::parse(read_file(file));
    std::vector<std::string> vars;
    for (const auto& v : in.at("vars")) vars.push_back(v.get<std::string>());
    Ideal<Rational> ideal{vars, {}};
    for (const auto& g : in.at("generators"))
        ideal.generators.push_back(parse_poly(g.get<std::string>(), vars));
    std::vector<std::string> order_vars;
    if (!order_spec.empty()) {
        std::istringstream ss(order_spec);
        std::string v;
        while (std::getline(ss, v, ',')) order_vars.push_back(v);
    } else if (in.contains("order")) {
        for (const auto& v : in.at("order")) order_vars.push_back(v.get<std::string>());
    } else {
        order_vars = vars;
    }
    MonomialOrder order = MonomialOrder::lex(order_vars);
    auto gb = reduce_basis(buchberger(ideal, order));
    auto dim = quotient_dimension(gb);
    std::string text = "basis:\n";
    json basis = json::array();
    for (const auto& e : gb.elements) {
        std::string s = print_poly(integer_primitive(e));
        basis.push_back(s);
        text += "  " + s + "\n";
    }
    std::string dim_text = dim ? std::to_string(*dim) : "INFINITE";
    text += "dimension: " + dim_text + "\n";
    json j{{"command", "groebner"}, {"basis", basis}, {"dimension", dim_text}};
    emit(opt, j, text);
    return 0;
}

int cmd_split(const Options& opt, const std::string& base, const std::string& other) {
    QuarticFixture f = quartic_fixture(opt);
    SplittingResult res = splitting_type_via_groebner(f.point(base), f.point(other));
    auto basis_json = [](const GroebnerBasis<Rational>& gb) {
        json a = json::array();
        for (const auto& e : gb.elements) a.push_back(print_poly(integer_primitive(e)));
        return a;
    };
    std::string text;
    for (auto [tag, gb, dim] :
         {std::tuple<const char*, const GroebnerBasis<Rational>&,
                     const std::optional<long>&>{"plus", res.basis_plus,
                                                 res.dim_plus},
          {"minus", res.basis_minus, res.dim_minus}}) {
        text += std::string(tag) + ":\n";
        for (const auto& e : gb.elements)
            text += "  " + print_poly(integer_primitive(e)) + "\n";
        text += "  dimension: " + std::to_string(*dim) + "\n";
    }
    text += "splitting type: (" + std::to_string(res.type.m1) + ", " +
            std::to_string(res.type.m2) + ")\n";
    json j{{"command", "split"},
           {"plus", {{"basis", basis_json(res.basis_plus)}, {"dimension", *res.dim_plus}}},
           {"minus",
            {{"basis", basis_json(res.basis_minus)}, {"dimension", *res.dim_minus}}},
           {"type", {res.type.m1, res.type.m2}}};
    emit(opt, j, text);
    return 0;
}

int cmd_lattice(const Options& opt, const std::string& s1, const std::string& s2) {
    std::string name = opt.fixture.empty() ? "ref-MW" : opt.fixture;
    std::string text = fixture_text(name);
    LatticeFixture f =
        text.empty() ? builtin_lattice(name) : parse_lattice_fixture(text);
    const Section& a = f.section(s1);
    const Section& b = f.section(s2);
    Rational h = height(f.basis, a.combo, b.combo);
    long inter = section_intersection(f.basis, f.fibers, a, b);
    std::string out = "height: " + h.str() + "\n" +
                      "intersection: " + std::to_string(inter) + "\n";
    json j{{"command", "lattice"},
           {"height", h.str()},
           {"intersection", inter}};
    emit(opt, j, out);
    return 0;
}

int cmd_comb(const Options& opt) {
    std::string name = opt.fixture.empty() ? "ref-C1" : opt.fixture;
    std::string text = fixture_text(name);
    Arrangement arr =
        text.empty() ? builtin_arrangement(name) : parse_arrangement_fixture(text);
    CombReport rep = verify_comb(arr);
    std::string out;
    json clauses = json::array();
    for (const auto& c : rep.clauses) {
        out += std::string(c.pass ? "[pass] " : "[fail] ") + c.name + " -- " +
               c.detail + "\n";
        clauses.push_back(json{{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    }
    out += rep.pass ? "PASS\n" : "FAIL\n";
    json j{{"command", "comb"}, {"clauses", clauses}, {"pass", rep.pass}};
    emit(opt, j, out);
    return rep.pass ? 0 : 1;
}

int cmd_family(const Options& opt, const std::string& name, const std::string& param,
               bool allow_degenerate, bool degeneracies, bool table1) {
    if (table1) {
        Table1Report rep = table1_check();
        std::string out;
        json cols = json::array();
        for (const auto& col : rep.columns) {
            out += "b = " + col.b.str() + ": ";
            for (int i = 0; i < 4; ++i) out += col.found[i] + " ";
            out += col.found_D;
            out += col.set_equal && col.d_ok ? " [ok" : " [MISMATCH";
            out += col.perm_matches ? "]" : ", order differs]";
            out += "\n";
            cols.push_back(json{{"b", col.b.str()},
                            {"set_equal", col.set_equal},
                            {"d_ok", col.d_ok},
                            {"order_matches", col.perm_matches}});
        }
        out += rep.pass ? "PASS\n" : "FAIL\n";
        emit(opt, json{{"command", "family"}, {"table1", cols}, {"pass", rep.pass}},
             out);
        return rep.pass ? 0 : 1;
    }
    FamilyName fam = family_from_string(name);
    if (degeneracies) {
        std::string out;
        json conds = json::array();
        for (const auto& c : degenerate_params(fam)) {
            out += print_unipoly(c.minpoly, "s") + " = 0 -- " + c.note + "\n";
            conds.push_back(json{{"minpoly", print_unipoly(c.minpoly, "s")}, {"note", c.note}});
        }
        emit(opt, json{{"command", "family"}, {"degenerate", conds}}, out);
        return 0;
    }
    if (param.empty()) usage_error("family needs a parameter value");
    Rational p{mpq_class(param)};
    PlaneCurve curve = family_eval(fam, p, allow_degenerate);
    std::string out = print_poly(curve.poly) + "\n";
    emit(opt, json{{"command", "family"}, {"poly", print_poly(curve.poly)}}, out);
    return 0;
}

int cmd_pi1(const Options& opt) {
    std::string name = opt.fixture.empty() ? "pi1-C1" : opt.fixture;
    std::string text = fixture_text(name);
    Pi1Fixture f = text.empty() ? builtin_pi1(name) : parse_pi1_fixture(text);
    AbelianInvariants inv = abelianize(f.presentation);
    std::string ab = "Z^" + std::to_string(inv.rank);
    for (const auto& d : inv.invariant_factors) ab += " x Z/" + d.get_str();
    SimplifyOutcome out = verify_simplification(f.presentation, f.script);
    std::string txt = "abelianization: " + ab + "\n";
    for (const auto& l : out.log) txt += l + "\n";
    txt += "final relators:\n";
    json relators = json::array();
    for (const auto& r : out.result.relators) {
        txt += "  " + print_word(r, out.result.generators) + "\n";
        relators.push_back(print_word(r, out.result.generators));
    }
    txt += out.pass ? "PASS\n" : "FAIL\n";
    json j{{"command", "pi1"},
           {"abelianization", ab},
           {"relators", relators},
           {"pass", out.pass}};
    emit(opt, j, txt);
    return out.pass ? 0 : 1;
}

int cmd_reproduce(const Options& opt, const std::string& scope) {
    ReproReport rep = reproduce(scope);
    std::string out;
    json checks = json::array();
    for (const auto& c : rep.checks) {
        out += std::string(c.pass ? "[pass] " : "[FAIL] ") + c.group + "/" + c.id;
        if (!c.pass) out += "\n  expected: " + c.expected + "\n  computed: " + c.computed;
        out += "\n";
        checks.push_back(json{{"id", c.id},
                          {"group", c.group},
                          {"expected", c.expected},
                          {"computed", c.computed},
                          {"pass", c.pass}});
    }
    bool pass = rep.pass();
    out += pass ? "PASS" : "FAIL";
    out += " (" + std::to_string(rep.checks.size()) + " checks)\n";
    json j{{"command", "reproduce"},
           {"scope", scope},
           {"checks", checks},
           {"pass", pass}};
    emit(opt, j, out);
    return pass ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact computations on a degree-7 conic-line arrangement"};
    app.require_subcommand(1);
    Options opt;
    app.add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"text", "structured"}));
    app.add_option("--fixture", opt.fixture, "built-in fixture name or file path");

    std::vector<std::string> add_terms;
    auto* add = app.add_subcommand("add", "group-law combination of named points");
    add->add_option("terms", add_terms, "point names with optional +/- signs");

    std::vector<std::string> mumford_names;
    bool mumford_gb = false;
    auto* mumford = app.add_subcommand("mumford", "Mumford pair of a divisor");
    mumford->add_option("points", mumford_names, "support point names");
    mumford->add_flag("--groebner", mumford_gb, "also print the basis route");

    std::string gb_file, gb_order;
    auto* groebner = app.add_subcommand("groebner", "reduced basis of an ideal file");
    groebner->add_option("file", gb_file, "ideal file (JSON)")->required();
    groebner->add_option("--order", gb_order, "comma-separated lex order");

    std::string split_base = "Q0", split_other;
    auto* split = app.add_subcommand("split", "splitting type via bases");
    split->add_option("other", split_other, "section point name")->required();
    split->add_option("--base", split_base, "base point name");

    std::string lat_s1, lat_s2;
    auto* lattice = app.add_subcommand("lattice", "height pairing and intersection");
    lattice->add_option("s1", lat_s1, "first section")->required();
    lattice->add_option("s2", lat_s2, "second section")->required();

    app.add_subcommand("comb", "verify the combinatorial type of an arrangement");

    std::string fam_name, fam_param;
    bool fam_allow = false, fam_degen = false, fam_table1 = false;
    auto* family = app.add_subcommand("family", "deformation family evaluation");
    family->add_option("name", fam_name, "family name");
    family->add_option("param", fam_param, "rational parameter value");
    family->add_flag("--allow-degenerate", fam_allow, "skip the degeneracy guard");
    family->add_flag("--degeneracies", fam_degen, "list degenerate parameters");
    family->add_flag("--table1", fam_table1, "check the specialization table");

    app.add_subcommand("pi1", "presentation simplification and abelianization");

    std::string scope = "all";
    auto* repro = app.add_subcommand("reproduce", "replay the golden computations");
    repro->add_option("scope", scope, "all|construction|families|splitting|lattice|comb|pi1");

    for (auto* sub : app.get_subcommands([](CLI::App*) { return true; }))
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (add->parsed()) return cmd_add(opt, add_terms);
        if (mumford->parsed()) return cmd_mumford(opt, mumford_names, mumford_gb);
        if (groebner->parsed()) return cmd_groebner(opt, gb_file, gb_order);
        if (split->parsed()) return cmd_split(opt, split_base, split_other);
        if (lattice->parsed()) return cmd_lattice(opt, lat_s1, lat_s2);
        if (app.get_subcommand("comb")->parsed()) return cmd_comb(opt);
        if (family->parsed())
            return cmd_family(opt, fam_name, fam_param, fam_allow, fam_degen,
                              fam_table1);
        if (app.get_subcommand("pi1")->parsed()) return cmd_pi1(opt);
        if (repro->parsed()) return cmd_reproduce(opt, scope);
    } catch (const parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
