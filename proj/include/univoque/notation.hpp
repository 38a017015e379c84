#pragma once

#include <string>
#include <string_view>
#include <variant>

#include "univoque/alphabet.hpp"
#include "univoque/sequence.hpp"

namespace univoque {

/// Result of parsing: an infinite sequence when the text ends in "^w",
/// otherwise a finite word.
using Parsed = std::variant<EPSeq, Word>;

/// Parses the sequence notation
///
///   text  := item* [item '^w']
///   item  := atom | '(' item+ ')' | item '^' count
///
/// where an atom is one glyph of `alphabet` and count is a positive decimal
/// integer. Everything before the "^w" item becomes the preperiod.
///
/// Examples over {0,1,m}: "m1^w" is m 1 1 1 ..., "mm1(m11m)^w",
/// "(1m^2)^w" is (1mm)^inf.
///
/// Throws ParseError (with byte offset) on malformed input.
Parsed parse_seq(std::string_view text, const Alphabet& alphabet);

/// parse_seq that insists on an infinite sequence.
EPSeq parse_infinite(std::string_view text, const Alphabet& alphabet);

/// parse_seq that insists on a finite word.
Word parse_word(std::string_view text, const Alphabet& alphabet);

/// "u(v)^w", or "uv^w" when the period is a single symbol.
std::string format_seq(const EPSeq& seq);

std::string format_word(const Word& word, const Alphabet& alphabet);

}  // namespace univoque
