#include <cla/fpgroup.hpp>

#include <cla/error.hpp>

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <sstream>

namespace cla {

Word free_reduce(Word w) {
    Word out;
    for (const auto& l : w) {
        if (!out.empty() && out.back().gen == l.gen && out.back().exp == -l.exp)
            out.pop_back();
        else
            out.push_back(l);
    }
    return out;
}

Word inverse(const Word& w) {
    Word out;
    for (auto it = w.rbegin(); it != w.rend(); ++it)
        out.push_back({it->gen, -it->exp});
    return out;
}

Word concat(const Word& a, const Word& b) {
    Word out = a;
    out.insert(out.end(), b.begin(), b.end());
    return free_reduce(std::move(out));
}

Word conjugate(const Word& w, const Word& by) {
    return concat(concat(by, w), inverse(by));
}

Word cyclic_reduce(Word w) {
    w = free_reduce(std::move(w));
    while (w.size() >= 2 && w.front().gen == w.back().gen &&
           w.front().exp == -w.back().exp) {
        w.erase(w.begin());
        w.pop_back();
        w = free_reduce(std::move(w));
    }
    return w;
}

Word cyclic_rotate(const Word& w, std::size_t k) {
    if (w.empty()) return w;
    k %= w.size();
    Word out(w.begin() + k, w.end());
    out.insert(out.end(), w.begin(), w.begin() + k);
    return out;
}

int Presentation::gen_index(const std::string& name) const {
    for (std::size_t i = 0; i < generators.size(); ++i)
        if (generators[i] == name) return (int)i;
    throw domain_error("unknown generator '" + name + "'");
}

namespace {

bool word_less(const Word& a, const Word& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].gen != b[i].gen) return a[i].gen < b[i].gen;
        if (a[i].exp != b[i].exp) return a[i].exp < b[i].exp;
    }
    return false;
}

/// Lexicographically smallest rotation of a cyclically reduced word.
Word canonical_rotation(const Word& w) {
    Word best = w;
    for (std::size_t k = 1; k < w.size(); ++k) {
        Word r = cyclic_rotate(w, k);
        if (word_less(r, best)) best = r;
    }
    return best;
}

/// Canonical representative of a relator up to conjugation and inversion.
Word relator_key(const Word& w) {
    Word c = cyclic_reduce(w);
    if (c.empty()) return c;
    Word a = canonical_rotation(c);
    Word b = canonical_rotation(cyclic_reduce(inverse(c)));
    return word_less(a, b) ? a : b;
}

std::string serialize(const Word& w) {
    std::string s;
    for (const auto& l : w) {
        s += (char)('A' + l.gen);
        s += l.exp > 0 ? '+' : '-';
    }
    return s;
}

} // namespace

// ---------------------------------------------------------------------------
// word text parsing / printing

namespace {

class WordParser {
public:
    WordParser(const std::string& text, const std::vector<std::string>& gens)
        : text_(text), gens_(gens) {}

    Word parse() {
        Word w = word();
        skip_ws();
        if (pos_ != text_.size()) throw parse_error("trailing input in word", pos_);
        return free_reduce(std::move(w));
    }

private:
    Word word() {
        Word out;
        for (;;) {
            skip_ws();
            if (pos_ >= text_.size()) break;
            char c = text_[pos_];
            if (c == ')' || c == ',' || c == ']' || c == '}') break;
            Word atom_w = atom();
            out.insert(out.end(), atom_w.begin(), atom_w.end());
        }
        return out;
    }

    Word atom() {
        char c = text_[pos_];
        Word base;
        if (c == '(') {
            ++pos_;
            base = word();
            expect(')');
        } else if (c == '[' || c == '{') {
            char close = c == '[' ? ']' : '}';
            ++pos_;
            Word a = word();
            expect(',');
            Word b = word();
            expect(close);
            if (c == '[') {
                base = concat(concat(a, b), concat(inverse(a), inverse(b)));
            } else {
                // tangency relator {a,b} = abab a^-1 b^-1 a^-1 b^-1
                Word ab = concat(a, b);
                base = concat(concat(ab, ab),
                              concat(concat(inverse(a), inverse(b)),
                                     concat(inverse(a), inverse(b))));
            }
        } else if (std::isalpha((unsigned char)c) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < text_.size() &&
                   (std::isalnum((unsigned char)text_[pos_]) || text_[pos_] == '_' ||
                    text_[pos_] == '\''))
                ++pos_;
            std::string name = text_.substr(start, pos_ - start);
            if (name == "e") return {};
            int gi = -1;
            for (std::size_t i = 0; i < gens_.size(); ++i)
                if (gens_[i] == name) gi = (int)i;
            if (gi < 0) throw parse_error("unknown generator '" + name + "'", start);
            base = {{gi, 1}};
        } else {
            throw parse_error("unexpected character in word", pos_);
        }
        long p = power();
        if (p == 1) return base;
        Word out;
        Word unit = p < 0 ? inverse(base) : base;
        for (long i = 0; i < (p < 0 ? -p : p); ++i)
            out.insert(out.end(), unit.begin(), unit.end());
        return free_reduce(std::move(out));
    }

    long power() {
        skip_ws();
        if (pos_ >= text_.size() || text_[pos_] != '^') return 1;
        ++pos_;
        skip_ws();
        bool neg = false;
        if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
            neg = text_[pos_] == '-';
            ++pos_;
        }
        if (pos_ >= text_.size() || !std::isdigit((unsigned char)text_[pos_]))
            throw parse_error("expected exponent", pos_);
        long v = 0;
        while (pos_ < text_.size() && std::isdigit((unsigned char)text_[pos_])) {
            v = v * 10 + (text_[pos_] - '0');
            if (v > 64) throw parse_error("exponent too large", pos_);
            ++pos_;
        }
        return neg ? -v : v;
    }

    void expect(char c) {
        skip_ws();
        if (pos_ >= text_.size() || text_[pos_] != c)
            throw parse_error(std::string("expected '") + c + "'", pos_);
        ++pos_;
    }
    void skip_ws() {
        while (pos_ < text_.size() &&
               (text_[pos_] == ' ' || text_[pos_] == '\t' || text_[pos_] == '*'))
            ++pos_;
    }

    const std::string& text_;
    const std::vector<std::string>& gens_;
    std::size_t pos_ = 0;
};

} // namespace

Word parse_word(const std::string& text, const std::vector<std::string>& generators) {
    return WordParser(text, generators).parse();
}

std::string print_word(const Word& w, const std::vector<std::string>& generators) {
    if (w.empty()) return "e";
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) out += " ";
        out += generators.at(w[i].gen);
        if (w[i].exp < 0) out += "^-1";
    }
    return out;
}

std::vector<Word> relator_template(RelatorKind kind, const std::vector<Word>& args) {
    auto need = [&](std::size_t n) {
        if (args.size() != n) throw domain_error("relator template arity mismatch");
    };
    switch (kind) {
        case RelatorKind::branch:
            need(2);
            return {concat(args[0], inverse(args[1]))};
        case RelatorKind::node:
            need(2);
            return {concat(concat(args[0], args[1]),
                           concat(inverse(args[0]), inverse(args[1])))};
        case RelatorKind::tangency: {
            need(2);
            Word ab = concat(args[0], args[1]);
            return {concat(concat(ab, ab),
                           concat(concat(inverse(args[0]), inverse(args[1])),
                                  concat(inverse(args[0]), inverse(args[1]))))};
        }
        case RelatorKind::triple: {
            need(3);
            Word abc = concat(concat(args[0], args[1]), args[2]);
            Word cab = concat(concat(args[2], args[0]), args[1]);
            Word bca = concat(concat(args[1], args[2]), args[0]);
            return {concat(abc, inverse(cab)), concat(abc, inverse(bca))};
        }
        case RelatorKind::projective: {
            if (args.empty()) throw domain_error("projective relator needs arguments");
            Word prod;
            for (const auto& a : args) prod = concat(prod, a);
            return {prod};
        }
    }
    throw domain_error("unknown relator kind");
}

// ---------------------------------------------------------------------------
// Smith normal form

SNFResult smith_normal_form(const std::vector<std::vector<Integer>>& A) {
    std::size_t rows = A.size();
    std::size_t cols = rows ? A[0].size() : 0;
    SNFResult res;
    res.D = A;
    res.U.assign(rows, std::vector<Integer>(rows, 0));
    res.V.assign(cols, std::vector<Integer>(cols, 0));
    for (std::size_t i = 0; i < rows; ++i) res.U[i][i] = 1;
    for (std::size_t j = 0; j < cols; ++j) res.V[j][j] = 1;
    auto& D = res.D;
    auto& U = res.U;
    auto& V = res.V;

    auto swap_rows = [&](std::size_t a, std::size_t b) {
        std::swap(D[a], D[b]);
        std::swap(U[a], U[b]);
    };
    auto swap_cols = [&](std::size_t a, std::size_t b) {
        for (std::size_t i = 0; i < rows; ++i) std::swap(D[i][a], D[i][b]);
        for (std::size_t i = 0; i < cols; ++i) std::swap(V[i][a], V[i][b]);
    };
    auto add_row = [&](std::size_t dst, std::size_t src, const Integer& f) {
        for (std::size_t j = 0; j < cols; ++j) D[dst][j] += f * D[src][j];
        for (std::size_t j = 0; j < rows; ++j) U[dst][j] += f * U[src][j];
    };
    auto add_col = [&](std::size_t dst, std::size_t src, const Integer& f) {
        for (std::size_t i = 0; i < rows; ++i) D[i][dst] += f * D[i][src];
        for (std::size_t i = 0; i < cols; ++i) V[i][dst] += f * V[i][src];
    };
    auto negate_row = [&](std::size_t r) {
        for (auto& x : D[r]) x = -x;
        for (auto& x : U[r]) x = -x;
    };

    std::size_t n = std::min(rows, cols);
    for (std::size_t k = 0; k < n; ++k) {
        for (;;) {
            // locate the entry of smallest absolute value in the submatrix
            std::size_t pi = k, pj = k;
            bool found = false;
            for (std::size_t i = k; i < rows; ++i)
                for (std::size_t j = k; j < cols; ++j) {
                    if (D[i][j] == 0) continue;
                    if (!found || abs(D[i][j]) < abs(D[pi][pj])) {
                        pi = i;
                        pj = j;
                        found = true;
                    }
                }
            if (!found) { k = n; break; }
            if (pi != k) swap_rows(pi, k);
            if (pj != k) swap_cols(pj, k);
            bool clean = true;
            for (std::size_t i = k + 1; i < rows; ++i) {
                if (D[i][k] == 0) continue;
                Integer q;
                mpz_fdiv_q(q.get_mpz_t(), D[i][k].get_mpz_t(), D[k][k].get_mpz_t());
                add_row(i, k, -q);
                if (D[i][k] != 0) clean = false;
            }
            for (std::size_t j = k + 1; j < cols; ++j) {
                if (D[k][j] == 0) continue;
                Integer q;
                mpz_fdiv_q(q.get_mpz_t(), D[k][j].get_mpz_t(), D[k][k].get_mpz_t());
                add_col(j, k, -q);
                if (D[k][j] != 0) clean = false;
            }
            if (!clean) continue;
            // pivot must divide the remaining submatrix
            bool divides_all = true;
            for (std::size_t i = k + 1; i < rows && divides_all; ++i)
                for (std::size_t j = k + 1; j < cols && divides_all; ++j)
                    if (D[i][j] % D[k][k] != 0) {
                        add_row(k, i, 1);
                        divides_all = false;
                    }
            if (divides_all) break;
        }
        if (k >= n) break;
        if (D[k][k] < 0) negate_row(k);
    }
    return res;
}

AbelianInvariants abelianize(const Presentation& p) {
    std::size_t rows = p.relators.size(), cols = p.generators.size();
    std::vector<std::vector<Integer>> A(rows, std::vector<Integer>(cols, 0));
    for (std::size_t i = 0; i < rows; ++i)
        for (const auto& l : p.relators[i]) A[i][l.gen] += l.exp;
    SNFResult snf = smith_normal_form(A);
    AbelianInvariants inv;
    std::size_t n = std::min(rows, cols);
    std::size_t nonzero = 0;
    for (std::size_t k = 0; k < n; ++k) {
        if (snf.D[k][k] == 0) continue;
        ++nonzero;
        if (snf.D[k][k] > 1) inv.invariant_factors.push_back(snf.D[k][k]);
    }
    inv.rank = (int)(cols - nonzero);
    return inv;
}

// ---------------------------------------------------------------------------
// Tietze machinery

Presentation tietze_eliminate(const Presentation& p, const std::string& gen,
                              std::size_t relator_index) {
    if (relator_index >= p.relators.size())
        throw domain_error("relator index out of range");
    int gi = p.gen_index(gen);
    const Word r = free_reduce(p.relators[relator_index]);
    int occurrences = 0;
    std::size_t at = 0;
    for (std::size_t i = 0; i < r.size(); ++i)
        if (r[i].gen == gi) {
            ++occurrences;
            at = i;
        }
    if (occurrences != 1)
        throw domain_error("relator is not solvable for '" + gen + "'");
    Word u(r.begin(), r.begin() + at);
    Word v(r.begin() + at + 1, r.end());
    // u g^e v = e  =>  g = (u^-1 v^-1)^e
    Word def = concat(inverse(u), inverse(v));
    if (r[at].exp < 0) def = inverse(def);

    auto substitute = [&](const Word& w) {
        Word out;
        for (const auto& l : w) {
            if (l.gen == gi) {
                Word img = l.exp > 0 ? def : inverse(def);
                out.insert(out.end(), img.begin(), img.end());
            } else {
                out.push_back(l);
            }
        }
        return free_reduce(std::move(out));
    };

    Presentation q;
    for (std::size_t i = 0; i < p.generators.size(); ++i)
        if ((int)i != gi) q.generators.push_back(p.generators[i]);
    for (std::size_t i = 0; i < p.relators.size(); ++i) {
        if (i == relator_index) continue;
        Word w = substitute(p.relators[i]);
        for (auto& l : w)
            if (l.gen > gi) --l.gen;
        q.relators.push_back(std::move(w));
    }
    return q;
}

namespace {

/// Greedy certified shortening: replace a relator by a strictly smaller
/// (length, then lex, on the canonical cyclic form) word differing from it
/// by a conjugate of another relator.  Every accepted step multiplies the
/// relator by a conjugate of another one, so the normal closure is
/// unchanged.
void autoreduce(Presentation& p, std::vector<std::string>* log) {
    auto tidy = [&] {
        std::vector<Word> kept;
        std::set<std::string> seen;
        for (const auto& r : p.relators) {
            Word c = cyclic_reduce(r);
            if (c.empty()) continue;
            std::string key = serialize(relator_key(c));
            if (seen.insert(key).second) kept.push_back(c);
        }
        p.relators = std::move(kept);
    };
    tidy();
    bool changed = true;
    int guard = 0;
    while (changed && ++guard < 1000) {
        changed = false;
        for (std::size_t i = 0; i < p.relators.size(); ++i) {
            Word cur = canonical_rotation(cyclic_reduce(p.relators[i]));
            Word best = cur;
            for (std::size_t j = 0; j < p.relators.size(); ++j) {
                if (i == j) continue;
                const Word s0 = cyclic_reduce(p.relators[j]);
                for (std::size_t rot = 0; rot < s0.size(); ++rot) {
                    for (int invert = 0; invert < 2; ++invert) {
                        Word s = cyclic_rotate(s0, rot);
                        if (invert) s = inverse(s);
                        // replace an occurrence of a long prefix u of s by
                        // the inverse of the remaining suffix
                        for (std::size_t ulen = (s.size() + 1) / 2; ulen <= s.size();
                             ++ulen) {
                            Word u(s.begin(), s.begin() + ulen);
                            Word vbar = inverse(Word(s.begin() + ulen, s.end()));
                            for (std::size_t crot = 0; crot < cur.size(); ++crot) {
                                Word base = cyclic_rotate(cur, crot);
                                if (base.size() < ulen) continue;
                                for (std::size_t pos = 0; pos + ulen <= base.size();
                                     ++pos) {
                                    bool match = true;
                                    for (std::size_t t = 0; t < ulen && match; ++t)
                                        match = base[pos + t] == u[t];
                                    if (!match) continue;
                                    Word cand(base.begin(), base.begin() + pos);
                                    cand.insert(cand.end(), vbar.begin(), vbar.end());
                                    cand.insert(cand.end(), base.begin() + pos + ulen,
                                                base.end());
                                    cand = canonical_rotation(
                                        cyclic_reduce(free_reduce(std::move(cand))));
                                    if (word_less(cand, best)) best = cand;
                                }
                            }
                        }
                    }
                }
            }
            if (word_less(best, cur)) {
                p.relators[i] = best;
                changed = true;
            }
        }
        if (changed) tidy();
    }
    tidy();
    if (log) log->push_back("autoreduce: " + std::to_string(p.relators.size()) +
                            " relators");
}

/// Bounded certified search: transform `target` into the empty word by
/// inserting conjugates of relators (each insertion multiplies by a
/// conjugate, so reaching e proves membership in the normal closure).
bool derivable(const Presentation& p, const Word& target, std::size_t max_len = 14,
               std::size_t max_relator_len = 16, std::size_t max_states = 300000) {
    Word start = free_reduce(target);
    if (start.empty()) return true;
    std::vector<Word> inserters;
    for (const auto& r0 : p.relators) {
        Word r = cyclic_reduce(r0);
        if (r.empty() || r.size() > max_relator_len) continue;
        for (std::size_t rot = 0; rot < r.size(); ++rot) {
            inserters.push_back(cyclic_rotate(r, rot));
            inserters.push_back(inverse(inserters.back()));
        }
    }
    std::set<std::string> visited{serialize(start)};
    std::deque<Word> queue{start};
    while (!queue.empty() && visited.size() < max_states) {
        Word w = std::move(queue.front());
        queue.pop_front();
        for (const auto& ins : inserters) {
            for (std::size_t pos = 0; pos <= w.size(); ++pos) {
                Word cand(w.begin(), w.begin() + pos);
                cand.insert(cand.end(), ins.begin(), ins.end());
                cand.insert(cand.end(), w.begin() + pos, w.end());
                cand = free_reduce(std::move(cand));
                if (cand.empty()) return true;
                if (cand.size() > max_len) continue;
                if (visited.insert(serialize(cand)).second) queue.push_back(cand);
            }
        }
    }
    return false;
}

Word commutator_of(int a, int b) {
    return {{a, 1}, {b, 1}, {a, -1}, {b, -1}};
}

} // namespace

std::vector<ScriptMove> parse_script(const std::string& text) {
    std::vector<ScriptMove> moves;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        std::size_t h = line.find('#');
        if (h != std::string::npos) line.erase(h);
        std::istringstream ls(line);
        std::string cmd;
        if (!(ls >> cmd)) continue;
        ScriptMove m;
        if (cmd == "eliminate") {
            m.kind = ScriptMove::Kind::eliminate;
            if (!(ls >> m.gen >> m.index))
                throw parse_error("eliminate needs a generator and an index", 0);
        } else if (cmd == "autoreduce") {
            m.kind = ScriptMove::Kind::autoreduce;
        } else if (cmd == "derive") {
            m.kind = ScriptMove::Kind::derive;
            std::getline(ls, m.word);
        } else if (cmd == "drop_consequences") {
            m.kind = ScriptMove::Kind::drop_consequences;
        } else {
            throw parse_error("unknown script move '" + cmd + "'", 0);
        }
        moves.push_back(std::move(m));
    }
    return moves;
}

SimplifyOutcome verify_simplification(const Presentation& p,
                                      const std::vector<ScriptMove>& script) {
    SimplifyOutcome out;
    out.result = p;
    AbelianInvariants inv0 = abelianize(p);
    for (const auto& m : script) {
        switch (m.kind) {
            case ScriptMove::Kind::eliminate:
                out.result = tietze_eliminate(out.result, m.gen, m.index);
                out.log.push_back("eliminate " + m.gen);
                break;
            case ScriptMove::Kind::autoreduce:
                autoreduce(out.result, &out.log);
                break;
            case ScriptMove::Kind::derive: {
                Word w = parse_word(m.word, out.result.generators);
                if (!derivable(out.result, w))
                    throw domain_error("derivation not found for: " + m.word);
                out.result.relators.push_back(w);
                out.log.push_back("derive " + m.word);
                break;
            }
            case ScriptMove::Kind::drop_consequences: {
                // relators with zero exponent sums lie in the derived
                // subgroup, which is the normal closure of the pairwise
                // generator commutators; they are redundant once those
                // commutators are all present
                std::size_t n = out.result.generators.size();
                std::vector<Word> comms;
                for (std::size_t a = 0; a < n; ++a)
                    for (std::size_t b = a + 1; b < n; ++b)
                        comms.push_back(commutator_of((int)a, (int)b));
                std::set<std::string> comm_keys;
                for (const auto& c : comms) comm_keys.insert(serialize(relator_key(c)));
                std::set<std::string> have;
                for (const auto& r : out.result.relators)
                    have.insert(serialize(relator_key(r)));
                for (const auto& c : comms)
                    if (!have.count(serialize(relator_key(c))))
                        throw domain_error("drop_consequences requires all pairwise "
                                           "commutators to be present");
                for (const auto& r : out.result.relators) {
                    if (comm_keys.count(serialize(relator_key(r)))) continue;
                    std::vector<long> sums(n, 0);
                    for (const auto& l : r) sums[l.gen] += l.exp;
                    for (long s : sums)
                        if (s != 0)
                            throw domain_error(
                                "relator with nonzero exponent sum cannot be dropped");
                }
                out.result.relators = comms;
                out.log.push_back("drop_consequences");
                break;
            }
        }
        if (!(abelianize(out.result) == inv0))
            throw domain_error("script step changed the abelianization");
    }
    // PASS iff exactly the rank-3 commutator presentation
    bool pass = out.result.generators.size() == 3;
    if (pass) {
        std::set<std::string> want, have;
        for (int a = 0; a < 3; ++a)
            for (int b = a + 1; b < 3; ++b)
                want.insert(serialize(relator_key(commutator_of(a, b))));
        for (const auto& r : out.result.relators)
            have.insert(serialize(relator_key(r)));
        pass = want == have && out.result.relators.size() == 3;
    }
    out.pass = pass;
    return out;
}

} // namespace cla
