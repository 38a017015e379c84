#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "univoque/alphabet.hpp"

namespace univoque {

/// A finite block of symbols (indices into some alphabet).
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Symbol> symbols) : symbols_(std::move(symbols)) {}
  Word(std::initializer_list<Symbol> symbols) : symbols_(symbols) {}

  std::size_t size() const noexcept { return symbols_.size(); }
  bool empty() const noexcept { return symbols_.empty(); }
  Symbol operator[](std::size_t i) const { return symbols_[i]; }
  std::span<const Symbol> symbols() const noexcept { return symbols_; }
  auto begin() const noexcept { return symbols_.begin(); }
  auto end() const noexcept { return symbols_.end(); }

  void push_back(Symbol s) { symbols_.push_back(s); }
  Word& operator+=(const Word& other);
  friend Word operator+(Word lhs, const Word& rhs) { return lhs += rhs; }

  /// `count` copies of this word.
  Word repeated(std::size_t count) const;

  /// Symbols [from, from + length), clamped to the end.
  Word sub(std::size_t from, std::size_t length = static_cast<std::size_t>(-1)) const;

  /// True iff `needle` occurs as a contiguous factor.
  bool contains(const Word& needle) const;

  /// Lexicographic on symbol indices (a proper prefix sorts first).
  friend auto operator<=>(const Word&, const Word&) = default;
  friend bool operator==(const Word&, const Word&) = default;

 private:
  std::vector<Symbol> symbols_;
};

/// Renders a word with the alphabet's glyphs, no grouping.
std::string spell(const Word& word, const Alphabet& alphabet);

/// An eventually periodic sequence u v v v ... over an alphabet.
///
/// Stored canonically: the period is primitive and the preperiod never ends
/// with the last period symbol, so two sequences are equal iff their stored
/// parts are equal.
class EPSeq {
 public:
  /// Throws DomainError if `period` is empty or any symbol is out of range.
  EPSeq(Alphabet alphabet, Word preperiod, Word period);

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  const Word& preperiod() const noexcept { return preperiod_; }
  const Word& period() const noexcept { return period_; }

  /// The i-th symbol, 0-based.
  Symbol at(std::size_t i) const noexcept;
  double digit_at(std::size_t i) const { return alphabet_.digit(at(i)); }

  /// Number of positions n >= 1 whose tails (c_{n+i}) exhaust all distinct
  /// tails: |preperiod| + |period|.
  std::size_t distinct_tail_count() const noexcept {
    return preperiod_.size() + period_.size();
  }

  /// True when some symbol equals `s`.
  bool uses(Symbol s) const noexcept;

  friend bool operator==(const EPSeq&, const EPSeq&) = default;

 private:
  Alphabet alphabet_;
  Word preperiod_;
  Word period_;
};

enum class Order { Less, Equal, Greater };

/// Lexicographic order of two sequences over the same alphabet.
Order lex_cmp(const EPSeq& a, const EPSeq& b);

/// The tail (c_{n+i})_{i>=1}; shift(s, 0) == s.
EPSeq shift(const EPSeq& seq, std::size_t n);

/// Ternary helpers: build words and sequences over {0, 1, m} from glyph
/// strings such as "1mm1". Throw DomainError on any other character.
Word ternary_word(std::string_view glyphs);
EPSeq ternary_seq(double m, std::string_view preperiod, std::string_view period);

}  // namespace univoque
