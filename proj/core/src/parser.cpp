#include <cla/parser.hpp>

#include <cctype>
#include <sstream>

namespace cla {

namespace {

class Parser {
public:
    Parser(const std::string& text, const std::vector<std::string>& vars)
        : text_(text), vars_(vars) {}

    MultiPoly<Rational> run() {
        auto p = expr();
        skip_ws();
        if (pos_ != text_.size()) throw parse_error("trailing input", pos_);
        return p;
    }

private:
    using Poly = MultiPoly<Rational>;

    Poly expr() {
        skip_ws();
        bool neg = false;
        if (peek() == '+' || peek() == '-') neg = (get() == '-');
        Poly acc = term();
        if (neg) acc = -acc;
        for (;;) {
            skip_ws();
            char c = peek();
            if (c != '+' && c != '-') break;
            get();
            Poly t = term();
            acc = (c == '-') ? acc - t : acc + t;
        }
        return acc;
    }

    Poly term() {
        skip_ws();
        Poly acc = Poly::constant(vars_, Rational(1));
        bool any = false;
        if (std::isdigit((unsigned char)peek())) {
            acc = Poly::constant(vars_, coef());
            any = true;
        }
        for (;;) {
            skip_ws();
            char c = peek();
            if (c == '*') {
                get();
                skip_ws();
                c = peek();
            }
            if (c == '(') {
                get();
                Poly inner = expr();
                skip_ws();
                if (peek() != ')') throw parse_error("expected ')'", pos_);
                get();
                acc *= maybe_power(inner);
                any = true;
            } else if (std::isalpha((unsigned char)c) || c == '_') {
                acc *= maybe_power(variable());
                any = true;
            } else if (std::isdigit((unsigned char)c) && any) {
                // forms like "2*3" are not produced by the printer but are
                // harmless to accept
                acc *= Poly::constant(vars_, coef());
            } else {
                break;
            }
        }
        if (!any) throw parse_error("expected term", pos_);
        return acc;
    }

    Poly maybe_power(Poly base) {
        skip_ws();
        if (peek() == '^') {
            get();
            skip_ws();
            std::size_t start = pos_;
            if (!std::isdigit((unsigned char)peek()))
                throw parse_error("expected exponent", pos_);
            long e = 0;
            while (std::isdigit((unsigned char)peek())) e = e * 10 + (get() - '0');
            if (e > 64) throw parse_error("exponent too large", start);
            return base.pow((int)e);
        }
        return base;
    }

    Poly variable() {
        std::size_t start = pos_;
        std::string name;
        while (std::isalnum((unsigned char)peek()) || peek() == '_' || peek() == '\'')
            name += get();
        for (const auto& v : vars_)
            if (v == name) return Poly::variable(vars_, name);
        throw parse_error("unknown variable '" + name + "'", start);
    }

    Rational coef() {
        std::string s;
        while (std::isdigit((unsigned char)peek())) s += get();
        skip_ws();
        if (peek() == '/') {
            // only treat as fraction if a digit follows
            std::size_t save = pos_;
            get();
            skip_ws();
            if (std::isdigit((unsigned char)peek())) {
                std::string d;
                while (std::isdigit((unsigned char)peek())) d += get();
                return Rational::from_string(s + "/" + d);
            }
            pos_ = save;
        }
        return Rational::from_string(s);
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace((unsigned char)text_[pos_])) ++pos_;
    }
    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
    char get() { return text_[pos_++]; }

    const std::string& text_;
    const std::vector<std::string>& vars_;
    std::size_t pos_ = 0;
};

// Graded-lex print order: total degree first, then lexicographically with
// later-declared variables ranking higher.  Returns true if a < b.
bool print_less(const Monomial& a, const Monomial& b) {
    int da = total_degree(a), db = total_degree(b);
    if (da != db) return da < db;
    for (int i = (int)a.size() - 1; i >= 0; --i)
        if (a[i] != b[i]) return a[i] < b[i];
    return false;
}

std::string monomial_text(const Monomial& m, const std::vector<std::string>& vars) {
    std::string s;
    // higher-ranked (later-declared) variables first
    for (int i = (int)vars.size() - 1; i >= 0; --i) {
        if (m[i] == 0) continue;
        if (!s.empty()) s += "*";
        s += vars[i];
        if (m[i] > 1) s += "^" + std::to_string(m[i]);
    }
    return s;
}

} // namespace

MultiPoly<Rational> parse_poly(const std::string& text,
                               const std::vector<std::string>& variables) {
    return Parser(text, variables).run();
}

std::string print_poly(const MultiPoly<Rational>& p) {
    if (p.is_zero()) return "0";
    std::vector<const Monomial*> order;
    for (const auto& [m, c] : p.terms()) order.push_back(&m);
    std::sort(order.begin(), order.end(),
              [](const Monomial* a, const Monomial* b) { return print_less(*b, *a); });
    std::string out;
    bool first = true;
    for (const Monomial* m : order) {
        Rational c = p.coeff(*m);
        bool neg = c.sign() < 0;
        if (first) {
            if (neg) out += "-";
            first = false;
        } else {
            out += neg ? " - " : " + ";
        }
        Rational a = c.abs();
        std::string mono = monomial_text(*m, p.vars());
        if (mono.empty()) {
            out += a.str();
        } else if (a.is_one()) {
            out += mono;
        } else {
            out += a.str() + "*" + mono;
        }
    }
    return out;
}

std::string print_unipoly(const UniPoly<Rational>& p, const std::string& var) {
    MultiPoly<Rational> m({var});
    for (int i = 0; i <= p.degree(); ++i)
        if (!p[i].is_zero())
            m += p[i] * MultiPoly<Rational>::variable({var}, var).pow(i);
    return print_poly(m);
}

std::string print_ratfunc(const RationalFunction& f, const std::string& var) {
    if (f.is_polynomial()) return print_unipoly(f.num(), var);
    return "(" + print_unipoly(f.num(), var) + ")/(" + print_unipoly(f.den(), var) + ")";
}

UniPoly<Rational> parse_unipoly(const std::string& text, const std::string& var) {
    MultiPoly<Rational> m = parse_poly(text, {var});
    std::vector<Rational> coeffs(m.degree() + 1, Rational(0));
    for (const auto& [mono, c] : m.terms()) coeffs[mono[0]] = c;
    return UniPoly<Rational>(std::move(coeffs));
}

RationalFunction parse_ratfunc(const std::string& text, const std::string& var) {
    // split on a top-level '/' that separates two parenthesized or plain
    // polynomial chunks; fall back to plain polynomial otherwise
    int depth = 0;
    for (std::size_t i = 0; i < text.size(); ++i) {
        char c = text[i];
        if (c == '(') ++depth;
        else if (c == ')') --depth;
        else if (c == '/' && depth == 0) {
            // distinguish "1/2*t" (rational coefficient) from "(..)/(..)";
            // a top-level slash is a fraction of polynomials only when the
            // left chunk is fully parenthesized or the right side starts
            // with '('
            std::size_t j = i + 1;
            while (j < text.size() && std::isspace((unsigned char)text[j])) ++j;
            if (j < text.size() && text[j] == '(') {
                return RationalFunction(parse_unipoly(text.substr(0, i), var),
                                        parse_unipoly(text.substr(i + 1), var));
            }
        }
    }
    return RationalFunction(parse_unipoly(text, var));
}

MultiPoly<Rational> integer_primitive(const MultiPoly<Rational>& p) {
    if (p.is_zero()) return p;
    Integer den(1);
    for (const auto& [m, c] : p.terms()) den = lcm(den, c.den());
    Integer num(0);
    for (const auto& [m, c] : p.terms()) num = gcd(num, Integer(c.num() * (den / c.den())));
    Rational scale(den, num);
    // positive leading coefficient in the print order
    const Monomial* lead = nullptr;
    for (const auto& [m, c] : p.terms())
        if (!lead || print_less(*lead, m)) lead = &m;
    if ((p.coeff(*lead) * scale).sign() < 0) scale = -scale;
    return scale * p;
}

std::vector<Rational> rational_roots(const UniPoly<Rational>& p) {
    if (p.is_zero()) throw domain_error("rational roots of zero polynomial");
    std::vector<Rational> roots;
    UniPoly<Rational> q = p;
    if (!q.is_zero() && q[0].is_zero()) {
        roots.push_back(Rational(0));
        while (!q.is_zero() && q[0].is_zero())
            q = UniPoly<Rational>(
                std::vector<Rational>(q.coeffs().begin() + 1, q.coeffs().end()));
    }
    if (q.degree() < 1) return roots;
    // clear denominators to a primitive integer polynomial
    Integer den(1);
    for (const auto& c : q.coeffs()) den = lcm(den, c.den());
    std::vector<Integer> ic;
    for (const auto& c : q.coeffs()) ic.push_back(c.num() * (den / c.den()));
    Integer a0 = abs(ic.front()), an = abs(ic.back());
    auto divisors = [](const Integer& n) {
        std::vector<Integer> ds;
        for (Integer d(1); d * d <= n; ++d) {
            if (n % d == 0) {
                ds.push_back(d);
                if (d * d != n) ds.push_back(n / d);
            }
        }
        return ds;
    };
    for (const Integer& pnum : divisors(a0)) {
        for (const Integer& qden : divisors(an)) {
            for (int s : {1, -1}) {
                Rational cand(s * pnum, qden);
                if (q.eval(cand).is_zero() &&
                    std::find(roots.begin(), roots.end(), cand) == roots.end())
                    roots.push_back(cand);
            }
        }
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

} // namespace cla
