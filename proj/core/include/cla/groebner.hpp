#pragma once

#include <cla/multipoly.hpp>

#include <deque>
#include <optional>
#include <type_traits>
#include <vector>

namespace cla {

template <class K>
struct Ideal {
    std::vector<std::string> vars;
    std::vector<MultiPoly<K>> generators;
};

template <class K>
struct GroebnerBasis {
    MonomialOrder order;
    std::vector<int> perm; // order permutation bound to the ambient vars
    std::vector<MultiPoly<K>> elements;
};

namespace detail {

template <class K>
MultiPoly<K> make_canonical(const MultiPoly<K>& p) {
    if (p.is_zero()) return p;
    if constexpr (std::is_same_v<K, Rational>) {
        return integer_primitive(p);
    } else {
        return p;
    }
}

} // namespace detail

/// Full reduction of p modulo the (Groebner) basis elements: the unique
/// remainder none of whose terms is divisible by any leading term.
template <class K>
MultiPoly<K> normal_form(const MultiPoly<K>& p,
                         const std::vector<MultiPoly<K>>& basis,
                         const std::vector<int>& perm) {
    MultiPoly<K> rem(p.vars());
    MultiPoly<K> work = p;
    while (!work.is_zero()) {
        const Monomial lm = work.leading_monomial(perm);
        bool reduced = false;
        for (const auto& b : basis) {
            if (b.is_zero()) continue;
            const Monomial& lb = b.leading_monomial(perm);
            if (!divides(lb, lm)) continue;
            K c = work.coeff(lm) / b.coeff(lb);
            typename MultiPoly<K>::TermMap t;
            t[mono_div(lm, lb)] = c;
            work -= MultiPoly<K>(p.vars(), std::move(t)) * b;
            reduced = true;
            break;
        }
        if (!reduced) {
            typename MultiPoly<K>::TermMap t;
            t[lm] = work.coeff(lm);
            MultiPoly<K> head(p.vars(), std::move(t));
            rem += head;
            work -= head;
        }
    }
    return rem;
}

template <class K>
MultiPoly<K> normal_form(const MultiPoly<K>& p, const GroebnerBasis<K>& gb) {
    return normal_form(p, gb.elements, gb.perm);
}

template <class K>
MultiPoly<K> s_polynomial(const MultiPoly<K>& f, const MultiPoly<K>& g,
                          const std::vector<int>& perm) {
    const Monomial& lf = f.leading_monomial(perm);
    const Monomial& lg = g.leading_monomial(perm);
    Monomial l = mono_lcm(lf, lg);
    typename MultiPoly<K>::TermMap tf, tg;
    tf[mono_div(l, lf)] = K(1) / f.coeff(lf);
    tg[mono_div(l, lg)] = K(1) / g.coeff(lg);
    return MultiPoly<K>(f.vars(), std::move(tf)) * f -
           MultiPoly<K>(f.vars(), std::move(tg)) * g;
}

/// Buchberger's algorithm with the normal selection strategy (smallest lcm
/// first) and the coprime-leading-term criterion.  Deterministic for a
/// fixed generator ordering.
template <class K>
GroebnerBasis<K> buchberger(const Ideal<K>& ideal, const MonomialOrder& order) {
    if (ideal.generators.empty()) throw domain_error("empty generator set");
    std::vector<int> perm = order.permutation(ideal.vars);
    std::vector<MultiPoly<K>> basis;
    for (const auto& g : ideal.generators) {
        if (g.vars() != ideal.vars) throw domain_error("generator variable mismatch");
        if (!g.is_zero()) basis.push_back(detail::make_canonical(g));
    }
    if (basis.empty()) throw domain_error("ideal generated by zero polynomials only");

    struct Pair {
        std::size_t i, j;
        Monomial lcm;
    };
    auto pair_less = [&perm](const Pair& a, const Pair& b) {
        int da = total_degree(a.lcm), db = total_degree(b.lcm);
        if (da != db) return da < db;
        if (a.lcm != b.lcm) return MonomialOrder::less(a.lcm, b.lcm, perm);
        if (a.i != b.i) return a.i < b.i;
        return a.j < b.j;
    };

    std::vector<Pair> queue;
    auto push_pairs_for = [&](std::size_t j) {
        for (std::size_t i = 0; i < j; ++i) {
            const Monomial& li = basis[i].leading_monomial(perm);
            const Monomial& lj = basis[j].leading_monomial(perm);
            // coprime criterion
            if (mono_lcm(li, lj) == mono_mul(li, lj)) continue;
            queue.push_back({i, j, mono_lcm(li, lj)});
        }
    };
    for (std::size_t j = 1; j < basis.size(); ++j) push_pairs_for(j);

    while (!queue.empty()) {
        auto it = std::min_element(queue.begin(), queue.end(), pair_less);
        Pair p = *it;
        queue.erase(it);
        // chain criterion: skip if some basis element's leading term divides
        // the lcm and both intermediate pairs were already handled (kept
        // conservative: require the element to be distinct from both)
        bool skip = false;
        for (std::size_t k = 0; k < basis.size() && !skip; ++k) {
            if (k == p.i || k == p.j) continue;
            const Monomial& lk = basis[k].leading_monomial(perm);
            if (!divides(lk, p.lcm)) continue;
            auto handled = [&](std::size_t a, std::size_t b) {
                if (a > b) std::swap(a, b);
                for (const auto& q : queue)
                    if (q.i == a && q.j == b) return false;
                return true;
            };
            if (handled(k, p.i) && handled(k, p.j)) skip = true;
        }
        if (skip) continue;
        MultiPoly<K> s = s_polynomial(basis[p.i], basis[p.j], perm);
        MultiPoly<K> r = normal_form(s, basis, perm);
        if (!r.is_zero()) {
            basis.push_back(detail::make_canonical(r));
            push_pairs_for(basis.size() - 1);
        }
    }
    return GroebnerBasis<K>{order, perm, std::move(basis)};
}

/// The unique reduced Groebner basis: redundant elements dropped, each
/// element fully reduced against the others and made monic, sorted by
/// descending leading monomial.
template <class K>
GroebnerBasis<K> reduce_basis(const GroebnerBasis<K>& gb) {
    const auto& perm = gb.perm;
    std::vector<MultiPoly<K>> kept;
    for (std::size_t i = 0; i < gb.elements.size(); ++i) {
        if (gb.elements[i].is_zero()) continue;
        const Monomial& li = gb.elements[i].leading_monomial(perm);
        bool redundant = false;
        for (std::size_t j = 0; j < gb.elements.size() && !redundant; ++j) {
            if (i == j || gb.elements[j].is_zero()) continue;
            const Monomial& lj = gb.elements[j].leading_monomial(perm);
            if (divides(lj, li) && (lj != li || j < i)) redundant = true;
        }
        if (!redundant) kept.push_back(gb.elements[i]);
    }
    // autoreduce until stable
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < kept.size(); ++i) {
            std::vector<MultiPoly<K>> others;
            for (std::size_t j = 0; j < kept.size(); ++j)
                if (j != i) others.push_back(kept[j]);
            MultiPoly<K> r = normal_form(kept[i], others, perm);
            if (!(r == kept[i])) {
                changed = true;
                if (r.is_zero()) {
                    kept.erase(kept.begin() + i);
                    --i;
                } else {
                    kept[i] = r;
                }
            }
        }
    }
    for (auto& e : kept) {
        K lc = e.coeff(e.leading_monomial(perm));
        e = (K(1) / lc) * e;
    }
    std::sort(kept.begin(), kept.end(), [&perm](const MultiPoly<K>& a, const MultiPoly<K>& b) {
        return MonomialOrder::less(b.leading_monomial(perm), a.leading_monomial(perm), perm);
    });
    return GroebnerBasis<K>{gb.order, perm, std::move(kept)};
}

/// Number of standard monomials of a reduced basis, or nullopt when the
/// quotient is infinite-dimensional.
template <class K>
std::optional<long> quotient_dimension(const GroebnerBasis<K>& gb) {
    if (gb.elements.empty()) throw domain_error("empty basis");
    std::size_t nvars = gb.elements[0].vars().size();
    std::vector<Monomial> leads;
    for (const auto& e : gb.elements) leads.push_back(e.leading_monomial(gb.perm));
    // {1} generates the unit ideal: zero-dimensional quotient of dim 0
    std::vector<int> bound(nvars, -1);
    for (std::size_t v = 0; v < nvars; ++v) {
        for (const auto& lm : leads) {
            bool pure = lm[v] > 0;
            for (std::size_t w = 0; w < nvars && pure; ++w)
                if (w != v && lm[w] > 0) pure = false;
            if (pure && (bound[v] < 0 || lm[v] < bound[v])) bound[v] = lm[v];
        }
    }
    for (const auto& lm : leads)
        if (total_degree(lm) == 0) return 0;
    for (std::size_t v = 0; v < nvars; ++v)
        if (bound[v] < 0) return std::nullopt;
    // enumerate monomials below the pure-power bounds
    long count = 0;
    Monomial m(nvars, 0);
    for (;;) {
        bool standard = true;
        for (const auto& lm : leads)
            if (divides(lm, m)) { standard = false; break; }
        if (standard) ++count;
        std::size_t v = 0;
        while (v < nvars) {
            if (++m[v] < bound[v]) break;
            m[v] = 0;
            ++v;
        }
        if (v == nvars) break;
    }
    return count;
}

} // namespace cla
