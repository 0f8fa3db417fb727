#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "crdfa/automaton.hpp"
#include "crdfa/state_set.hpp"
#include "crdfa/word.hpp"

namespace crdfa {

/// Reads the text format
///
///   dfa <n> <k>
///   <n successors for letter 0>
///   ...
///   <n successors for letter k-1>
///
/// Lines starting with '#' and blank lines are skipped. Throws ParseError
/// with the 1-based line number of the offending line.
Automaton parse_automaton(std::string_view text);

/// Inverse of parse_automaton: single spaces, no trailing space, every line
/// newline-terminated.
std::string serialize_automaton(const Automaton& automaton);

/// Parses "0,10" into a set over `universe` states. Rejects duplicates and
/// out-of-range indices; "" is accepted only when `allow_empty` is set.
StateSet parse_subset(std::string_view text, std::size_t universe, bool allow_empty = false);

/// Letter names a..z when the alphabet has at most 26 letters, otherwise
/// dot-separated indices. The empty word prints as "ε".
std::string format_word(const Word& w, std::size_t alphabet_size);

}  // namespace crdfa
