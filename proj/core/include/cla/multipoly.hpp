#pragma once

#include <cla/error.hpp>
#include <cla/rational.hpp>

#include <algorithm>
#include <map>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

namespace cla {

/// Exponent vector; length equals the number of ambient variables.
using Monomial = std::vector<int>;

inline int total_degree(const Monomial& m) {
    return std::accumulate(m.begin(), m.end(), 0);
}
inline bool divides(const Monomial& a, const Monomial& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}
inline Monomial mono_mul(const Monomial& a, const Monomial& b) {
    Monomial m(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) m[i] = a[i] + b[i];
    return m;
}
inline Monomial mono_div(const Monomial& a, const Monomial& b) {
    Monomial m(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) m[i] = a[i] - b[i];
    return m;
}
inline Monomial mono_lcm(const Monomial& a, const Monomial& b) {
    Monomial m(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) m[i] = std::max(a[i], b[i]);
    return m;
}

/// Pure lexicographic monomial order; `vars_desc` lists the variables from
/// highest to lowest.  Bound to an ambient variable list via permutation().
struct MonomialOrder {
    std::vector<std::string> vars_desc;

    static MonomialOrder lex(std::vector<std::string> vars_desc) {
        return MonomialOrder{std::move(vars_desc)};
    }

    /// perm[k] = index (in the ambient list) of the k-th highest variable.
    std::vector<int> permutation(const std::vector<std::string>& ambient) const {
        if (vars_desc.size() != ambient.size())
            throw domain_error("monomial order does not cover the ambient variables");
        std::vector<int> perm;
        perm.reserve(vars_desc.size());
        for (const auto& v : vars_desc) {
            auto it = std::find(ambient.begin(), ambient.end(), v);
            if (it == ambient.end())
                throw domain_error("monomial order names unknown variable '" + v + "'");
            perm.push_back(static_cast<int>(it - ambient.begin()));
        }
        return perm;
    }

    /// a < b in this lex order, with exponents living in the ambient list.
    static bool less(const Monomial& a, const Monomial& b, const std::vector<int>& perm) {
        for (int idx : perm) {
            if (a[idx] != b[idx]) return a[idx] < b[idx];
        }
        return false;
    }
};

/// Sparse multivariate polynomial over a field K with an ordered variable
/// list.  No zero coefficients are stored.
template <class K>
class MultiPoly {
public:
    using TermMap = std::map<Monomial, K>;

    MultiPoly() = default;
    explicit MultiPoly(std::vector<std::string> vars) : vars_(std::move(vars)) {}
    MultiPoly(std::vector<std::string> vars, TermMap terms)
        : vars_(std::move(vars)), terms_(std::move(terms)) {
        prune();
    }

    static MultiPoly constant(std::vector<std::string> vars, K c) {
        MultiPoly p(std::move(vars));
        if (!c.is_zero()) p.terms_[Monomial(p.vars_.size(), 0)] = std::move(c);
        return p;
    }
    static MultiPoly variable(std::vector<std::string> vars, const std::string& name) {
        MultiPoly p(std::move(vars));
        Monomial m(p.vars_.size(), 0);
        m[p.var_index(name)] = 1;
        p.terms_[m] = K(1);
        return p;
    }

    const std::vector<std::string>& vars() const { return vars_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const {
        return terms_.empty() ||
               (terms_.size() == 1 && total_degree(terms_.begin()->first) == 0);
    }

    int var_index(const std::string& name) const {
        auto it = std::find(vars_.begin(), vars_.end(), name);
        if (it == vars_.end()) throw domain_error("unknown variable '" + name + "'");
        return static_cast<int>(it - vars_.begin());
    }

    int degree() const {
        int d = -1;
        for (const auto& [m, c] : terms_) d = std::max(d, total_degree(m));
        return d;
    }
    int degree_in(int var) const {
        int d = -1;
        for (const auto& [m, c] : terms_) d = std::max(d, m[var]);
        return d;
    }

    const K& coeff(const Monomial& m) const {
        static const K kzero{0};
        auto it = terms_.find(m);
        return it == terms_.end() ? kzero : it->second;
    }

    MultiPoly operator-() const {
        MultiPoly r(vars_);
        for (const auto& [m, c] : terms_) r.terms_[m] = -c;
        return r;
    }
    friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
        a.check_compatible(b);
        MultiPoly r = a;
        for (const auto& [m, c] : b.terms_) {
            auto [it, fresh] = r.terms_.try_emplace(m, c);
            if (!fresh) {
                it->second += c;
                if (it->second.is_zero()) r.terms_.erase(it);
            }
        }
        return r;
    }
    friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) { return a + (-b); }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
        a.check_compatible(b);
        MultiPoly r(a.vars_);
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) {
                Monomial m = mono_mul(ma, mb);
                auto [it, fresh] = r.terms_.try_emplace(m, ca * cb);
                if (!fresh) {
                    it->second += ca * cb;
                    if (it->second.is_zero()) r.terms_.erase(it);
                }
            }
        return r;
    }
    friend MultiPoly operator*(const K& c, const MultiPoly& p) {
        MultiPoly r(p.vars_);
        if (c.is_zero()) return r;
        for (const auto& [m, pc] : p.terms_) r.terms_[m] = c * pc;
        return r;
    }
    MultiPoly& operator+=(const MultiPoly& o) { return *this = *this + o; }
    MultiPoly& operator-=(const MultiPoly& o) { return *this = *this - o; }
    MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }

    friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
        return a.vars_ == b.vars_ && a.terms_ == b.terms_;
    }
    friend bool operator<(const MultiPoly& a, const MultiPoly& b) {
        if (a.terms_.size() != b.terms_.size()) return a.terms_.size() < b.terms_.size();
        return a.terms_ < b.terms_;
    }

    MultiPoly pow(int n) const {
        MultiPoly r = constant(vars_, K(1));
        for (int i = 0; i < n; ++i) r *= *this;
        return r;
    }

    /// Leading monomial with respect to a lex permutation.
    const Monomial& leading_monomial(const std::vector<int>& perm) const {
        if (is_zero()) throw domain_error("leading monomial of zero polynomial");
        const Monomial* best = nullptr;
        for (const auto& [m, c] : terms_)
            if (!best || MonomialOrder::less(*best, m, perm)) best = &m;
        return *best;
    }

    /// Ring homomorphism: substitute every variable by the given image
    /// polynomial (images share one ambient variable list).
    MultiPoly substitute(const std::vector<MultiPoly>& images) const {
        if (images.size() != vars_.size())
            throw domain_error("substitution image count mismatch");
        const std::vector<std::string>& tv = images.empty() ? vars_ : images[0].vars();
        MultiPoly r(tv);
        for (const auto& [m, c] : terms_) {
            MultiPoly term = constant(tv, c);
            for (std::size_t i = 0; i < vars_.size(); ++i)
                if (m[i] > 0) term *= images[i].pow(m[i]);
            r += term;
        }
        return r;
    }

    /// Specializes one variable to a scalar; the variable stays in the
    /// ambient list with exponent 0.
    MultiPoly specialize(const std::string& name, const K& value) const {
        int vi = var_index(name);
        MultiPoly r(vars_);
        for (const auto& [m, c] : terms_) {
            K cc = c;
            for (int e = 0; e < m[vi]; ++e) cc = cc * value;
            Monomial mm = m;
            mm[vi] = 0;
            if (cc.is_zero()) continue;
            auto [it, fresh] = r.terms_.try_emplace(mm, cc);
            if (!fresh) {
                it->second += cc;
                if (it->second.is_zero()) r.terms_.erase(it);
            }
        }
        return r;
    }

    /// Drops a variable that no term uses.
    MultiPoly drop_var(const std::string& name) const {
        int vi = var_index(name);
        std::vector<std::string> nv;
        for (std::size_t i = 0; i < vars_.size(); ++i)
            if ((int)i != vi) nv.push_back(vars_[i]);
        MultiPoly r(nv);
        for (const auto& [m, c] : terms_) {
            if (m[vi] != 0) throw domain_error("variable '" + name + "' still occurs");
            Monomial mm;
            for (std::size_t i = 0; i < m.size(); ++i)
                if ((int)i != vi) mm.push_back(m[i]);
            r.terms_[mm] = c;
        }
        return r;
    }

    /// Reinterprets this polynomial in a larger ambient variable list.
    MultiPoly extend(const std::vector<std::string>& new_vars) const {
        std::vector<int> where;
        for (const auto& v : vars_) {
            auto it = std::find(new_vars.begin(), new_vars.end(), v);
            if (it == new_vars.end())
                throw domain_error("extend: missing variable '" + v + "'");
            where.push_back(static_cast<int>(it - new_vars.begin()));
        }
        MultiPoly r(new_vars);
        for (const auto& [m, c] : terms_) {
            Monomial mm(new_vars.size(), 0);
            for (std::size_t i = 0; i < m.size(); ++i) mm[where[i]] = m[i];
            r.terms_[mm] = c;
        }
        return r;
    }

private:
    void check_compatible(const MultiPoly& o) const {
        if (vars_ != o.vars_) throw domain_error("incompatible variable lists");
    }
    void prune() {
        for (auto it = terms_.begin(); it != terms_.end();) {
            if (it->second.is_zero()) it = terms_.erase(it);
            else ++it;
        }
    }

    std::vector<std::string> vars_;
    TermMap terms_;
};

/// Clears denominators and divides by the integer content; the result has
/// coprime integer coefficients and positive leading coefficient in the
/// graded-lex print order.  Zero stays zero.
MultiPoly<Rational> integer_primitive(const MultiPoly<Rational>& p);

} // namespace cla
