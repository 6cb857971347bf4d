#pragma once

#include <cla/multipoly.hpp>

#include <string>

namespace cla {

enum class CurveKind { line, conic, quartic_union };

/// Affine plane curve in the (t, x) chart.
struct PlaneCurve {
    MultiPoly<Rational> poly; // over variables (t, x)
    std::string label;
    CurveKind kind = CurveKind::line;
};

inline const std::vector<std::string>& plane_vars() {
    static const std::vector<std::string> v{"t", "x"};
    return v;
}

} // namespace cla
