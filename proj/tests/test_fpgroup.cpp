#include <cla/fixtures.hpp>
#include <cla/fpgroup.hpp>

#include <doctest.h>

#include <random>

using namespace cla;

namespace {

const std::vector<std::string> AB{"a", "b"};
const std::vector<std::string> ABC{"a", "b", "c"};

Word w(const std::string& text, const std::vector<std::string>& gens = AB) {
    return parse_word(text, gens);
}

// determinant over Q by Gaussian elimination; enough to certify +-1
Rational int_det(const std::vector<std::vector<Integer>>& m) {
    std::size_t n = m.size();
    std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a[i][j] = Rational(m[i][j]);
    Rational det(1);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && a[p][c].is_zero()) ++p;
        if (p == n) return Rational(0);
        if (p != c) {
            std::swap(a[p], a[c]);
            det = -det;
        }
        det *= a[c][c];
        for (std::size_t r = c + 1; r < n; ++r) {
            Rational f = a[r][c] / a[c][c];
            for (std::size_t j = c; j < n; ++j) a[r][j] -= f * a[c][j];
        }
    }
    return det;
}

std::vector<std::vector<Integer>> mat_mul(const std::vector<std::vector<Integer>>& a,
                                          const std::vector<std::vector<Integer>>& b) {
    std::size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
    std::vector<std::vector<Integer>> out(n, std::vector<Integer>(m, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t l = 0; l < k; ++l)
            for (std::size_t j = 0; j < m; ++j) out[i][j] += a[i][l] * b[l][j];
    return out;
}

} // namespace

TEST_CASE("free reduction and word operations") {
    CHECK(free_reduce(w("a a^-1 b")) == w("b"));
    CHECK(free_reduce(w("a b b^-1 a^-1")).empty());
    CHECK(inverse(w("a b^2")) == w("b^-2 a^-1"));
    CHECK(concat(w("a b"), w("b^-1 a")) == w("a^2"));
    CHECK(conjugate(w("b"), w("a")) == w("a b a^-1"));
    CHECK(cyclic_reduce(w("a b a^-1")) == w("b"));
    CHECK(cyclic_rotate(w("a b c", ABC), 1) == w("b c a", ABC));
}

TEST_CASE("word parsing and printing") {
    CHECK(print_word(w("a b^-1 a^2"), AB) == "a b^-1 a a");
    CHECK(print_word(Word{}, AB) == "e");
    CHECK(w("e").empty());
    CHECK(w("[a, b]") == w("a b a^-1 b^-1"));
    CHECK(w("{a, b}") == w("a b a b a^-1 b^-1 a^-1 b^-1"));
    CHECK(w("(a b)^2") == w("a b a b"));
    CHECK(w("(a b)^-1") == w("b^-1 a^-1"));
    // generator names with primes resolve correctly
    std::vector<std::string> primed{"a", "a'"};
    CHECK(parse_word("a' a'^-1 a", primed) == parse_word("a", primed));
    CHECK_THROWS_AS(w("q"), parse_error);
    CHECK_THROWS_AS(w("a^"), parse_error);
    CHECK_THROWS_AS(w("(a"), parse_error);
    // round-trip on the fixture relators
    auto fix = builtin_pi1("pi1-C1");
    for (const auto& r : fix.presentation.relators) {
        std::string text = print_word(r, fix.presentation.generators);
        CHECK(parse_word(text, fix.presentation.generators) == r);
    }
}

TEST_CASE("relator templates") {
    Word a = w("a"), b = w("b");
    auto branch = relator_template(RelatorKind::branch, {a, b});
    REQUIRE(branch.size() == 1);
    CHECK(branch[0] == w("a b^-1"));
    auto node = relator_template(RelatorKind::node, {a, b});
    REQUIRE(node.size() == 1);
    CHECK(node[0] == w("[a, b]"));
    auto tang = relator_template(RelatorKind::tangency, {a, b});
    REQUIRE(tang.size() == 1);
    CHECK(tang[0] == w("{a, b}"));
    auto triple = relator_template(RelatorKind::triple, {w("a", ABC), w("b", ABC), w("c", ABC)});
    CHECK(triple.size() == 2);
    auto proj = relator_template(RelatorKind::projective, {w("a", ABC), w("b", ABC), w("c", ABC)});
    REQUIRE(proj.size() == 1);
    CHECK(proj[0] == w("a b c", ABC));
}

TEST_CASE("smith normal form on fixtures") {
    SNFResult r = smith_normal_form({{2, 0}, {0, 3}});
    CHECK(r.D[0][0] == 1);
    CHECK(r.D[1][1] == 6);
    SNFResult s = smith_normal_form({{2, 4, 4}, {-6, 6, 12}, {10, 4, 16}});
    CHECK(s.D[0][0] == 2);
    CHECK(s.D[1][1] == 2);
    CHECK(s.D[2][2] == 156);
    SNFResult zero = smith_normal_form({{0, 0}, {0, 0}});
    CHECK(zero.D[0][0] == 0);
    CHECK(zero.D[1][1] == 0);
}

TEST_CASE("smith normal form properties on random matrices") {
    std::mt19937_64 rng(424242);
    for (int iter = 0; iter < 120; ++iter) {
        std::size_t rows = 1 + rng() % 4, cols = 1 + rng() % 4;
        std::vector<std::vector<Integer>> A(rows, std::vector<Integer>(cols));
        for (auto& row : A)
            for (auto& e : row) e = Integer((long)(rng() % 21) - 10);
        SNFResult r = smith_normal_form(A);
        // U A V == D
        CHECK(mat_mul(mat_mul(r.U, A), r.V) == r.D);
        // D diagonal, nonnegative, with a divisibility chain
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j) {
                if (i != j) CHECK(r.D[i][j] == 0);
                else CHECK(r.D[i][j] >= 0);
            }
        for (std::size_t i = 0; i + 1 < std::min(rows, cols); ++i) {
            Integer d = r.D[i][i], e = r.D[i + 1][i + 1];
            if (d == 0) CHECK(e == 0);
            else CHECK(e % d == 0);
        }
        // U and V unimodular
        Rational du = int_det(r.U), dv = int_det(r.V);
        CHECK((du == Rational(1) || du == Rational(-1)));
        CHECK((dv == Rational(1) || dv == Rational(-1)));
    }
}

TEST_CASE("abelianization of known groups") {
    // Z^2 = <a,b | [a,b]>
    Presentation z2{AB, {w("[a, b]")}};
    CHECK(abelianize(z2) == AbelianInvariants{2, {}});
    // Z/2 * nothing else visible: <a | a^2>
    Presentation c2{{"a"}, {parse_word("a^2", {"a"})}};
    CHECK(abelianize(c2) == AbelianInvariants{0, {Integer(2)}});
    // trefoil group <a,b | abab^-1a^-1b^-1 ... > has abelianization Z
    Presentation tref{AB, {free_reduce(w("a b a b^-1 a^-1 b^-1"))}};
    CHECK(abelianize(tref) == AbelianInvariants{1, {}});
    // free group of rank 3
    Presentation f3{ABC, {}};
    CHECK(abelianize(f3) == AbelianInvariants{3, {}});
}

TEST_CASE("tietze elimination preserves the abelianization") {
    // <a,b,c | c a^-1 b^-1, [a,b]> -> eliminate c -> <a,b | [a,b]>
    Presentation p{ABC, {free_reduce(w("c a^-1 b^-1", ABC)), w("[a, b]", ABC)}};
    auto before = abelianize(p);
    Presentation q = tietze_eliminate(p, "c", 0);
    CHECK(q.generators == AB);
    CHECK(abelianize(q) == before);
    // the relator must contain the generator exactly once
    Presentation bad{AB, {w("a b a b^-1")}};
    CHECK_THROWS_AS(tietze_eliminate(bad, "a", 0), domain_error);
}

TEST_CASE("simplification scripts for the builtin presentations") {
    for (const char* name : {"pi1-C1", "pi1-C3"}) {
        CAPTURE(name);
        auto fix = builtin_pi1(name);
        CHECK(fix.presentation.generators.size() == 7);
        CHECK(fix.presentation.relators.size() == 19);
        CHECK(abelianize(fix.presentation) == AbelianInvariants{3, {}});
        auto outcome = verify_simplification(fix.presentation, fix.script);
        CHECK(outcome.pass);
        CHECK(outcome.result.generators.size() == 3);
        CHECK(outcome.result.relators.size() == 3);
    }
}

TEST_CASE("scripts that do not certify fail loudly") {
    auto fix = builtin_pi1("pi1-C1");
    // deriving a word that is not a consequence must throw
    auto script = parse_script("derive alpha");
    CHECK_THROWS_AS(verify_simplification(fix.presentation, script), domain_error);
    // dropping consequences without the commutators in place must throw
    auto drop = parse_script("drop_consequences");
    CHECK_THROWS_AS(verify_simplification(fix.presentation, drop), domain_error);
}
