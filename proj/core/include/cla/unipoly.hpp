#pragma once

#include <cla/error.hpp>
#include <cla/rational.hpp>

#include <algorithm>
#include <ostream>
#include <utility>
#include <vector>

namespace cla {

/// Dense univariate polynomial over a field K.  The coefficient of highest
/// index is nonzero; the zero polynomial has an empty coefficient vector.
template <class K>
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(K c) { coeffs_.push_back(std::move(c)); trim(); }
    explicit UniPoly(std::vector<K> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    static UniPoly zero() { return UniPoly(); }
    static UniPoly one() { return UniPoly(K(1)); }
    /// The monomial x^n.
    static UniPoly monomial(int n, K c = K(1)) {
        std::vector<K> v(n + 1, K(0));
        v[n] = std::move(c);
        return UniPoly(std::move(v));
    }

    bool is_zero() const { return coeffs_.empty(); }
    /// degree of the zero polynomial is -1 by convention
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

    const K& operator[](int i) const {
        static const K kzero{0};
        if (i < 0 || i > degree()) return kzero;
        return coeffs_[i];
    }
    const std::vector<K>& coeffs() const { return coeffs_; }

    const K& leading() const {
        if (is_zero()) throw domain_error("leading coefficient of zero polynomial");
        return coeffs_.back();
    }

    bool is_monic() const { return !is_zero() && leading().is_one(); }

    UniPoly operator-() const {
        std::vector<K> v = coeffs_;
        for (auto& c : v) c = -c;
        return UniPoly(std::move(v));
    }

    friend UniPoly operator+(const UniPoly& a, const UniPoly& b) {
        std::vector<K> v(std::max(a.coeffs_.size(), b.coeffs_.size()), K(0));
        for (std::size_t i = 0; i < v.size(); ++i) v[i] = a[(int)i] + b[(int)i];
        return UniPoly(std::move(v));
    }
    friend UniPoly operator-(const UniPoly& a, const UniPoly& b) {
        std::vector<K> v(std::max(a.coeffs_.size(), b.coeffs_.size()), K(0));
        for (std::size_t i = 0; i < v.size(); ++i) v[i] = a[(int)i] - b[(int)i];
        return UniPoly(std::move(v));
    }
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
        if (a.is_zero() || b.is_zero()) return UniPoly();
        std::vector<K> v(a.coeffs_.size() + b.coeffs_.size() - 1, K(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
                v[i + j] += a.coeffs_[i] * b.coeffs_[j];
        return UniPoly(std::move(v));
    }
    friend UniPoly operator*(const K& c, const UniPoly& p) {
        std::vector<K> v = p.coeffs_;
        for (auto& x : v) x = c * x;
        return UniPoly(std::move(v));
    }

    friend bool operator==(const UniPoly& a, const UniPoly& b) {
        return a.coeffs_ == b.coeffs_;
    }

    /// Euclidean division: a = q*b + r with deg r < deg b.
    friend std::pair<UniPoly, UniPoly> divrem(const UniPoly& a, const UniPoly& b) {
        if (b.is_zero()) throw domain_error("division by zero polynomial");
        UniPoly r = a;
        std::vector<K> q(std::max(a.degree() - b.degree() + 1, 0), K(0));
        K inv = b.leading().inverse();
        while (!r.is_zero() && r.degree() >= b.degree()) {
            int shift = r.degree() - b.degree();
            K c = r.leading() * inv;
            q[shift] = c;
            // r -= c * x^shift * b
            std::vector<K> v = r.coeffs_;
            for (int i = 0; i <= b.degree(); ++i) v[i + shift] -= c * b.coeffs_[i];
            r = UniPoly(std::move(v));
        }
        return {UniPoly(std::move(q)), r};
    }

    friend UniPoly operator/(const UniPoly& a, const UniPoly& b) {
        auto [q, r] = divrem(a, b);
        if (!r.is_zero()) throw domain_error("inexact polynomial division");
        return q;
    }
    friend UniPoly operator%(const UniPoly& a, const UniPoly& b) {
        return divrem(a, b).second;
    }

    K eval(const K& x) const {
        K acc(0);
        for (int i = degree(); i >= 0; --i) acc = acc * x + coeffs_[i];
        return acc;
    }

    UniPoly derivative() const {
        if (degree() < 1) return UniPoly();
        std::vector<K> v(coeffs_.size() - 1);
        for (std::size_t i = 1; i < coeffs_.size(); ++i) v[i - 1] = K((long)i) * coeffs_[i];
        return UniPoly(std::move(v));
    }

    UniPoly monic() const {
        if (is_zero()) return *this;
        return leading().inverse() * *this;
    }

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
    }
    std::vector<K> coeffs_;
};

/// Monic gcd via the Euclidean algorithm.
template <class K>
UniPoly<K> gcd(UniPoly<K> a, UniPoly<K> b) {
    while (!b.is_zero()) {
        auto r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

/// Yun's squarefree decomposition: p = lc * prod f_i^{m_i} with the f_i
/// monic, squarefree and pairwise coprime.  Returns (f_i, m_i) pairs with
/// strictly increasing m_i; factors equal to 1 are skipped.
template <class K>
std::vector<std::pair<UniPoly<K>, int>> squarefree_decomposition(const UniPoly<K>& p) {
    if (p.is_zero()) throw domain_error("squarefree decomposition of zero");
    std::vector<std::pair<UniPoly<K>, int>> out;
    UniPoly<K> f = p.monic();
    if (f.degree() == 0) return out;
    UniPoly<K> fp = f.derivative();
    UniPoly<K> a = gcd(f, fp);
    UniPoly<K> b = f / a;
    UniPoly<K> c = fp / a;
    UniPoly<K> d = c - b.derivative();
    int m = 1;
    while (b.degree() > 0) {
        UniPoly<K> fi = gcd(b, d);
        if (fi.degree() > 0) out.emplace_back(fi, m);
        b = b / fi;
        c = d / fi;
        d = c - b.derivative();
        ++m;
    }
    return out;
}

/// All rational roots of p, found from integer divisor bounds on the
/// primitive part and verified by evaluation.
std::vector<Rational> rational_roots(const UniPoly<Rational>& p);

template <class K>
std::ostream& operator<<(std::ostream& os, const UniPoly<K>& p) {
    if (p.is_zero()) return os << "0";
    for (int i = p.degree(); i >= 0; --i) {
        if (p[i].is_zero()) continue;
        if (i != p.degree()) os << " + ";
        os << p[i];
        if (i > 0) os << "*x^" << i;
    }
    return os;
}

} // namespace cla
