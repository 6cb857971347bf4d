#pragma once

#include <cla/rational.hpp>

#include <map>
#include <string>
#include <vector>

namespace cla {

/// Singular-fiber data of an elliptic surface: I_n fibers with, per
/// section, the index of the fiber component the section meets
/// (0 = the component meeting the zero section).
struct FiberConfig {
    struct Fiber {
        std::string id;
        int n = 2; // type I_n
    };
    std::vector<Fiber> fibers;

    const Fiber& by_id(const std::string& id) const;
};

/// Height-pairing data over a fixed basis of sections.
struct LatticeBasis {
    std::vector<std::string> names;
    std::vector<std::vector<Rational>> gram; // symmetric
    long chi = 1;                            // Euler number
};

/// Integer combination of basis sections, with an optional torsion
/// summand (torsion contributes nothing to the height).
struct SectionCombo {
    std::vector<long> coefficients;
    bool torsion = false;
};

/// A named section: its Mordell-Weil combination, intersection with the
/// zero section, and fiber-component incidences (fiber id -> index).
struct Section {
    std::string name;
    SectionCombo combo;
    long sO = 0;
    std::map<std::string, int> incidence;
};

struct SplittingType {
    int m1 = 0, m2 = 0; // m1 <= m2
    friend bool operator==(const SplittingType&, const SplittingType&) = default;
};

/// Bilinear extension of the Gram matrix: c1^T * Gram * c2.
Rational height(const LatticeBasis& basis, const SectionCombo& c1,
                const SectionCombo& c2);

/// Local correction term of an I_n fiber for sections through components
/// i and j: zero when either index is 0, else min(i,j) * (n - max(i,j)) / n.
Rational contribution(int n, int i, int j);

/// Solves the height formula for the section-section intersection number:
/// s1.s2 = chi + s1.O + s2.O - <P1,P2> - sum of local contributions.
/// Throws when the result is not a nonnegative integer.
long section_intersection(const LatticeBasis& basis, const FiberConfig& fibers,
                          const Section& s1, const Section& s2);

/// Splitting type of the pair of plane curves below s_base and s_other:
/// (s_base . s_other, total - s_base . s_other) sorted ascending, where
/// total is the plane intersection number of the two curves.
SplittingType splitting_type_via_lattice(const LatticeBasis& basis,
                                         const FiberConfig& fibers,
                                         const Section& base, const Section& other,
                                         int total);

} // namespace cla
