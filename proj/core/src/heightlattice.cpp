#include <cla/heightlattice.hpp>

#include <cla/error.hpp>

#include <algorithm>

namespace cla {

const FiberConfig::Fiber& FiberConfig::by_id(const std::string& id) const {
    for (const auto& f : fibers)
        if (f.id == id) return f;
    throw domain_error("unknown fiber '" + id + "'");
}

Rational height(const LatticeBasis& basis, const SectionCombo& c1,
                const SectionCombo& c2) {
    std::size_t n = basis.names.size();
    if (c1.coefficients.size() != n || c2.coefficients.size() != n)
        throw domain_error("combination length does not match the basis");
    Rational h;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            h += Rational(c1.coefficients[i]) * basis.gram[i][j] *
                 Rational(c2.coefficients[j]);
    return h;
}

Rational contribution(int n, int i, int j) {
    if (n < 2) throw domain_error("fiber type I_n requires n >= 2");
    if (i < 0 || j < 0 || i >= n || j >= n)
        throw domain_error("component index out of range for I_n");
    if (i == 0 || j == 0) return Rational(0);
    long lo = std::min(i, j), hi = std::max(i, j);
    return Rational(lo * (n - hi), n);
}

long section_intersection(const LatticeBasis& basis, const FiberConfig& fibers,
                          const Section& s1, const Section& s2) {
    Rational total_contr;
    for (const auto& f : fibers.fibers) {
        auto i1 = s1.incidence.find(f.id);
        auto i2 = s2.incidence.find(f.id);
        if (i1 == s1.incidence.end() || i2 == s2.incidence.end())
            throw domain_error("missing incidence data at fiber '" + f.id + "'");
        total_contr += contribution(f.n, i1->second, i2->second);
    }
    Rational h = height(basis, s1.combo, s2.combo);
    Rational r = Rational(basis.chi) + Rational(s1.sO) + Rational(s2.sO) - h -
                 total_contr;
    if (!r.is_integer() || r.sign() < 0)
        throw domain_error("inconsistent fixture: intersection number " + r.str());
    return r.num().get_si();
}

SplittingType splitting_type_via_lattice(const LatticeBasis& basis,
                                         const FiberConfig& fibers,
                                         const Section& base, const Section& other,
                                         int total) {
    long m = section_intersection(basis, fibers, base, other);
    if (m > total) throw domain_error("intersection exceeds the plane total");
    SplittingType st;
    st.m1 = (int)std::min<long>(m, total - m);
    st.m2 = (int)std::max<long>(m, total - m);
    return st;
}

} // namespace cla
