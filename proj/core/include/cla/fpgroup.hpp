#pragma once

#include <cla/rational.hpp>

#include <cstddef>
#include <string>
#include <vector>

namespace cla {

/// One letter of a group word: generator index and exponent +1 / -1.
struct GenExp {
    int gen = 0;
    int exp = 1;
    friend bool operator==(const GenExp&, const GenExp&) = default;
};

/// Freely reduced words are the canonical currency of this module; the
/// helpers below always return freely reduced results.
using Word = std::vector<GenExp>;

Word free_reduce(Word w);
Word inverse(const Word& w);
Word concat(const Word& a, const Word& b);
Word conjugate(const Word& w, const Word& by); // by * w * by^-1
Word cyclic_reduce(Word w);
Word cyclic_rotate(const Word& w, std::size_t k);

struct Presentation {
    std::vector<std::string> generators;
    std::vector<Word> relators;

    int gen_index(const std::string& name) const;
};

/// Word syntax: juxtaposed atoms; atom := gen ('^' int)? | '(' word ')'
/// ('^' int)? | '[' word ',' word ']' (commutator) | '{' word ',' word '}'
/// (the tangency relator abab a^-1 b^-1 a^-1 b^-1).  Whitespace separates
/// atoms; generator names may contain primes.
Word parse_word(const std::string& text, const std::vector<std::string>& generators);
std::string print_word(const Word& w, const std::vector<std::string>& generators);

enum class RelatorKind { branch, node, tangency, triple, projective };

/// The relator words attached to each singularity type, on conjugated
/// generator arguments: branch(a,b) -> a b^-1; node(a,b) -> [a,b];
/// tangency(a,b) -> abab a^-1 b^-1 a^-1 b^-1; triple(a,b,c) -> the two
/// cyclic equalities; projective(args...) -> the product of all arguments.
std::vector<Word> relator_template(RelatorKind kind, const std::vector<Word>& args);

/// Smith normal form U*A*V = D with U, V unimodular and the diagonal of D
/// a divisibility chain of nonnegative integers.
struct SNFResult {
    std::vector<std::vector<Integer>> D, U, V;
};
SNFResult smith_normal_form(const std::vector<std::vector<Integer>>& A);

struct AbelianInvariants {
    int rank = 0;
    std::vector<Integer> invariant_factors; // entries > 1
    friend bool operator==(const AbelianInvariants&, const AbelianInvariants&) = default;
};

/// Abelianization via the exponent-sum matrix and its Smith normal form.
AbelianInvariants abelianize(const Presentation& p);

/// Eliminates a generator using a relator in which it occurs exactly once
/// with exponent +1 or -1; the defining word is substituted everywhere.
Presentation tietze_eliminate(const Presentation& p, const std::string& gen,
                              std::size_t relator_index);

/// Script moves for verify_simplification.  Each move is a certified
/// group-preserving transformation:
///  - eliminate <gen> <index>: Tietze elimination as above;
///  - autoreduce: free/cyclic reduction, duplicate removal, and greedy
///    length-lex shortening of relators by conjugates of other relators;
///  - derive <word>: bounded search for a derivation of the word as a
///    product of conjugates of current relators; appends it on success;
///  - drop_consequences: removes every relator that lies in the derived
///    subgroup (zero exponent sums) once the commutators of all generator
///    pairs occurring in it are present as relators.
struct ScriptMove {
    enum class Kind { eliminate, autoreduce, derive, drop_consequences };
    Kind kind = Kind::autoreduce;
    std::string gen;       // eliminate
    std::size_t index = 0; // eliminate
    std::string word;      // derive
};

std::vector<ScriptMove> parse_script(const std::string& text);

struct SimplifyOutcome {
    Presentation result;
    bool pass = false; // result is exactly <g1,g2,g3 | all pairwise commutators>
    std::vector<std::string> log;
};

/// Replays a simplification script; every step either succeeds with a
/// certificate-by-construction or throws.  PASS iff the final presentation
/// is the rank-3 free abelian commutator presentation.
SimplifyOutcome verify_simplification(const Presentation& p,
                                      const std::vector<ScriptMove>& script);

} // namespace cla
