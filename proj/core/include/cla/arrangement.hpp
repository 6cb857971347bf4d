#pragma once

#include <cla/elliptic.hpp>
#include <cla/plane.hpp>

#include <optional>
#include <string>
#include <vector>

namespace cla {

struct Arrangement {
    std::vector<PlaneCurve> components;

    const PlaneCurve& by_label(const std::string& label) const;
};

/// One geometric intersection point of a curve pair.  Conjugate irrational
/// points are listed individually (coordinates absent); rational points
/// carry their affine (t, x) coordinates when they are affine.
struct ProfileEntry {
    int multiplicity = 1;
    std::optional<std::pair<Rational, Rational>> point;
    bool at_infinity = false;
};

/// Parameters of the coordinate change t -> t + a*x, z -> z + b*x + c*t
/// preceding the projection along x.  The projection center is (a, 1, b);
/// c rotates the image line at infinity so that intersections on the line
/// x = 0 can be brought into the affine image chart.
struct Projection {
    Rational a, b, c;
};

struct PairProfile {
    int bezout = 0;                    // deg f * deg g
    std::vector<ProfileEntry> points;  // multiplicities sum to bezout
    Projection proj;                   // projection parameters used
    UniPoly<Rational> eliminant;       // monic, degree == bezout

    std::vector<int> multiplicities() const; // sorted ascending
};

/// Eliminant of the pair under the given projection: homogenize, apply the
/// coordinate change, take Res_x, read the result at z = 1.  Returns
/// nullopt when the projection center lies on a curve or some intersection
/// point maps to infinity (degree deficiency).  Throws domain_error when
/// the curves share a component.
std::optional<UniPoly<Rational>> projected_eliminant(const PlaneCurve& f,
                                                     const PlaneCurve& g,
                                                     const Projection& proj);

/// Deterministic projection candidates tried by the profiler.
const std::vector<Projection>& projection_candidates();

/// Full intersection profile of a curve pair: tries the candidate
/// projections and keeps the one separating the most geometric points.
PairProfile intersection_profile(const PlaneCurve& f, const PlaneCurve& g);

struct CombClause {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct CombReport {
    std::vector<CombClause> clauses;
    bool pass = false;
};

/// Checks the combinatorial type of a conic-line arrangement with
/// components labeled C1, C2, C3 and a line: C1.C2 four simple points; C3
/// through exactly two of them and tangent to C1, C2 elsewhere; the line
/// tangent to C1 and C2 and transversal to C3.
CombReport verify_comb(const Arrangement& arr);

/// The point P_ij on y^2 = F(x) cut out by the chord x = (ti+tj) t - ti*tj,
/// with the negative square root chosen for the y-scale.
CurvePoint chord_point(const WeierstrassCurve& curve, const Rational& ti,
                       const Rational& tj);

/// Closed-form x-coordinate of P_ik +/- P_kj via the chord-slope formula
/// lambda^2 - (a1 - t^2) - x_ik - x_kj; requires the factored curve form.
RationalFunction weak_contact_x(const WeierstrassCurve& curve, const CurvePoint& p_ik,
                                const CurvePoint& p_kj, int sign);

/// Determinant test for smoothness of a conic in the (t, x) chart.
bool smooth_conic(const MultiPoly<Rational>& poly);

} // namespace cla
