#pragma once

#include <cla/arrangement.hpp>
#include <cla/elliptic.hpp>
#include <cla/fpgroup.hpp>
#include <cla/heightlattice.hpp>

#include <string>
#include <vector>

namespace cla {

/// Named curve-and-points record: the elliptic fibration y^2 = F(x) and
/// the rational points all constructions start from.
struct QuarticFixture {
    WeierstrassCurve curve;
    std::vector<std::pair<std::string, CurvePoint>> points;

    const CurvePoint& point(const std::string& name) const;
};

/// Mordell-Weil lattice data: intersection form on the chosen basis, the
/// fiber configuration, and the sections with their component incidences.
struct LatticeFixture {
    LatticeBasis basis;
    FiberConfig fibers;
    std::vector<Section> sections;

    const Section& section(const std::string& name) const;
};

/// A finite presentation together with its simplification script.
struct Pi1Fixture {
    Presentation presentation;
    std::vector<ScriptMove> script;
};

/// Built-in fixtures.  Quartic: "ref-Q".  Arrangement: "ref-C1" ..
/// "ref-C4" and "symmetric-Q".  Lattice: "ref-MW".  Presentation:
/// "pi1-C1", "pi1-C3".  Unknown names throw domain_error.
QuarticFixture builtin_quartic(const std::string& name);
Arrangement builtin_arrangement(const std::string& name);
LatticeFixture builtin_lattice(const std::string& name);
Pi1Fixture builtin_pi1(const std::string& name);

std::vector<std::string> builtin_fixture_names();

/// JSON loaders for external fixture files.  Schemas:
///  quartic:      {"curve": {"a1": str, "a2": str}, "points": {name: [x, y]}}
///  arrangement:  {"components": [{"label": str, "kind": "line|conic",
///                 "poly": str}]}
///  lattice:      {"chi": int, "gram": [[str]], "basis": [names],
///                 "fibers": [{"id": str, "n": int}],
///                 "sections": {name: {"coeffs": [int], "sO": int,
///                 "incidence": {fiber: component}}}}
///  presentation: {"generators": [names], "relators": [word strings],
///                 "script": [move strings]}
QuarticFixture parse_quartic_fixture(const std::string& json_text);
Arrangement parse_arrangement_fixture(const std::string& json_text);
LatticeFixture parse_lattice_fixture(const std::string& json_text);
Pi1Fixture parse_pi1_fixture(const std::string& json_text);

} // namespace cla
