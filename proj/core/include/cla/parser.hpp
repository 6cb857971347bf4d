#pragma once

#include <cla/multipoly.hpp>
#include <cla/ratfunc.hpp>
#include <cla/unipoly.hpp>

#include <string>
#include <vector>

namespace cla {

/// Parses a polynomial expression over the declared variables.
///
/// Grammar: expr := term (('+'|'-') term)*; term := coef? ('*'? atom)*;
/// atom := var ('^' uint)? | '(' expr ')'; coef := int ('/' uint)?.
/// Whitespace is ignored.  Unknown identifiers and syntax errors throw
/// parse_error with a position.
MultiPoly<Rational> parse_poly(const std::string& text,
                               const std::vector<std::string>& variables);

/// Canonical text form: terms in descending graded-lex order, where the
/// later a variable appears in the declaration the higher it ranks (so with
/// variables (t, x) the polynomial x - 5t + 6 prints as "x - 5*t + 6").
/// parse_poly(print_poly(p), p.vars()) == p.
std::string print_poly(const MultiPoly<Rational>& p);

/// Canonical text of a univariate polynomial in the named variable.
std::string print_unipoly(const UniPoly<Rational>& p, const std::string& var = "t");

/// Canonical text of an element of Q(t): "num" or "(num)/(den)".
std::string print_ratfunc(const RationalFunction& f, const std::string& var = "t");

/// Parses a univariate polynomial in `var`.
UniPoly<Rational> parse_unipoly(const std::string& text, const std::string& var = "t");

/// Parses "p" or "p/q" with p, q polynomial expressions in `var`.
RationalFunction parse_ratfunc(const std::string& text, const std::string& var = "t");

} // namespace cla
