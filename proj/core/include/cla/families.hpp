#pragma once

#include <cla/plane.hpp>
#include <cla/unipoly.hpp>

#include <array>
#include <string>
#include <vector>

namespace cla {

enum class FamilyName { C3a, C3pa, C2b, L1b, L2b, L3b, L4b, D3b };

FamilyName family_from_string(const std::string& name);
std::string family_to_string(FamilyName name);

/// Member of a one-parameter deformation family, evaluated at a rational
/// parameter.  Throws on degenerate parameters unless overridden.
PlaneCurve family_eval(FamilyName name, const Rational& param,
                       bool allow_degenerate = false);

/// One degeneracy condition: a minimal polynomial in the parameter
/// (degree 1 for an explicit rational value) plus a short description.
struct DegenerateCondition {
    UniPoly<Rational> minpoly;
    std::string note;
};

std::vector<DegenerateCondition> degenerate_params(FamilyName name);

bool is_degenerate_param(FamilyName name, const Rational& param);

/// Reference curves of the symmetric model: C1, C2, the bitangent lines
/// L1..L4 (the chart equations t=3, t=-3, x=3, x=-3).
PlaneCurve symmetric_C1();
PlaneCurve symmetric_C2();
PlaneCurve symmetric_L(int i); // 1..4

struct Table1Column {
    Rational b;
    std::array<std::string, 4> found;   // curve matched by L_{1,b}..L_{4,b}
    std::array<std::string, 4> printed; // the table's row entries
    std::string found_D, printed_D;
    bool set_equal = false;             // {L_{i,b}} = {L_1..L_4} up to scalar
    bool d_ok = false;                  // D_{3,b} proportional to printed_D's curve
    bool perm_matches = false;          // found == printed entrywise
};

struct Table1Report {
    std::vector<Table1Column> columns;
    bool pass = false; // set-level and D-row checks only; permutation
                       // mismatches are reported, not failed
};

Table1Report table1_check();

} // namespace cla
