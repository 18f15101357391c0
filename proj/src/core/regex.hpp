#pragma once

#include <string>
#include <string_view>

#include "core/automata.hpp"

namespace ans {

/// Parses a regular expression over `alphabet` and returns the minimal trim
/// automaton of the denoted language.
///
/// Grammar (whitespace ignored):
///
///     union   := concat ('|' concat)*
///     concat  := postfix+
///     postfix := atom ('*' | '?')*
///     atom    := letter | 'eps' | '(' union ')'
///
/// The keyword `eps` takes precedence over the letters e, p, s; write those
/// letters separated by whitespace or parentheses when they spell the keyword.
/// Throws ParseError with the 0-based offending position.
Dfa parse_regex(std::string_view text, const OrderedAlphabet& alphabet);

/// A regular expression for L(d) in the grammar above, obtained by state
/// elimination. Throws for the empty language, which the grammar cannot
/// express.
std::string print_regex(const Dfa& d);

}  // namespace ans
