#pragma once

#include <cla/multipoly.hpp>

#include <vector>

namespace cla {

/// Coefficient of var^k, as a polynomial in the same ambient variables
/// (the extracted variable appears with exponent 0).
template <class K>
MultiPoly<K> coeff_in_var(const MultiPoly<K>& p, int var, int k) {
    typename MultiPoly<K>::TermMap terms;
    for (const auto& [m, c] : p.terms()) {
        if (m[var] != k) continue;
        Monomial mm = m;
        mm[var] = 0;
        terms[mm] = c;
    }
    return MultiPoly<K>(p.vars(), std::move(terms));
}

/// Exact quotient a / b in the polynomial ring; throws if b does not
/// divide a.
template <class K>
MultiPoly<K> exact_divide(const MultiPoly<K>& a, const MultiPoly<K>& b) {
    if (b.is_zero()) throw domain_error("polynomial division by zero");
    std::vector<int> perm(a.vars().size());
    for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = (int)i;
    MultiPoly<K> rem = a, quot(a.vars());
    const Monomial& lb = b.leading_monomial(perm);
    const K lcb = b.coeff(lb);
    while (!rem.is_zero()) {
        const Monomial& lr = rem.leading_monomial(perm);
        if (!divides(lb, lr)) throw domain_error("inexact polynomial division");
        Monomial q = mono_div(lr, lb);
        K c = rem.coeff(lr) / lcb;
        typename MultiPoly<K>::TermMap t;
        t[q] = c;
        MultiPoly<K> qt(a.vars(), std::move(t));
        quot += qt;
        rem -= qt * b;
    }
    return quot;
}

/// Resultant of f and g with respect to `var`, computed exactly by
/// fraction-free (Bareiss) elimination of the Sylvester matrix.
template <class K>
MultiPoly<K> resultant(const MultiPoly<K>& f, const MultiPoly<K>& g,
                       const std::string& var_name) {
    if (f.vars() != g.vars()) throw domain_error("resultant: variable mismatch");
    int var = f.var_index(var_name);
    if (f.is_zero() || g.is_zero()) return MultiPoly<K>(f.vars());
    int m = f.degree_in(var), n = g.degree_in(var);
    auto cst = [&](K c) { return MultiPoly<K>::constant(f.vars(), std::move(c)); };
    if (m == 0 && n == 0) return cst(K(1));
    if (m == 0) return coeff_in_var(f, var, 0).pow(n);
    if (n == 0) return coeff_in_var(g, var, 0).pow(m);

    int size = m + n;
    std::vector<std::vector<MultiPoly<K>>> a(size, std::vector<MultiPoly<K>>(size, MultiPoly<K>(f.vars())));
    for (int r = 0; r < n; ++r)
        for (int k = 0; k <= m; ++k) a[r][r + m - k] = coeff_in_var(f, var, k);
    for (int r = 0; r < m; ++r)
        for (int k = 0; k <= n; ++k) a[n + r][r + n - k] = coeff_in_var(g, var, k);

    // Bareiss fraction-free Gaussian elimination
    MultiPoly<K> prev = cst(K(1));
    int sign = 1;
    for (int k = 0; k < size - 1; ++k) {
        if (a[k][k].is_zero()) {
            int swap_row = -1;
            for (int r = k + 1; r < size; ++r)
                if (!a[r][k].is_zero()) { swap_row = r; break; }
            if (swap_row < 0) return MultiPoly<K>(f.vars());
            std::swap(a[k], a[swap_row]);
            sign = -sign;
        }
        for (int i = k + 1; i < size; ++i) {
            for (int j = k + 1; j < size; ++j)
                a[i][j] = exact_divide(a[i][j] * a[k][k] - a[i][k] * a[k][j], prev);
            a[i][k] = MultiPoly<K>(f.vars());
        }
        prev = a[k][k];
    }
    MultiPoly<K> det = a[size - 1][size - 1];
    return sign < 0 ? -det : det;
}

} // namespace cla
