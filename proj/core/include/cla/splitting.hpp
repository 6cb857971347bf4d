#pragma once

#include <cla/elliptic.hpp>
#include <cla/groebner.hpp>
#include <cla/heightlattice.hpp>

#include <optional>

namespace cla {

/// Ambient variables of the double-cover chart.
const std::vector<std::string>& cover_vars(); // {"t", "x", "y"}

/// Defining ideal of one lift of the plane curve below P to the double
/// cover y^2 = F: <x - x_P, y - sign * y_P>, denominators cleared.
Ideal<Rational> lift_ideal(const CurvePoint& p, int sign);

struct SplittingResult {
    SplittingType type;
    GroebnerBasis<Rational> basis_plus, basis_minus;
    std::optional<long> dim_plus, dim_minus;
};

/// Intersects a fixed lift of the curve below `base` with the two lifts of
/// the curve below `other` in Q[t,x,y] (lex x > y > t) and reads the
/// splitting type from the two quotient dimensions.
SplittingResult splitting_type_via_groebner(const CurvePoint& base,
                                            const CurvePoint& other);

} // namespace cla
