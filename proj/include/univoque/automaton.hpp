#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "univoque/sequence.hpp"

namespace univoque {

/// Letters of the zero-free alphabet {1, m}, in lexicographic order.
enum class Letter : std::uint8_t { One = 0, M = 1 };
inline constexpr std::array<Letter, 2> kLetters{Letter::One, Letter::M};

/// {1,m} letter of a ternary symbol; DomainError for the digit 0.
Letter letter_of(Symbol s);
Symbol symbol_of(Letter l);
char glyph_of(Letter l);

/// Deterministic automaton over {1, m} with partial transitions. Every state
/// is accepting; the language of interest is the set of labels of infinite
/// paths starting at `start()`.
class Automaton {
 public:
  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  using Row = std::array<std::size_t, 2>;  // indexed by Letter

  /// The automaton with no states (empty language).
  Automaton() = default;

  /// Throws DomainError if start or a target is out of range.
  Automaton(std::size_t start, std::vector<Row> transitions,
            std::vector<Word> forbidden = {});

  bool empty() const noexcept { return rows_.empty(); }
  std::size_t size() const noexcept { return rows_.size(); }
  std::size_t start() const noexcept { return start_; }
  std::size_t next(std::size_t state, Letter l) const {
    return rows_.at(state)[static_cast<std::size_t>(l)];
  }
  const std::vector<Row>& rows() const noexcept { return rows_; }
  std::size_t edge_count() const noexcept;
  std::size_t out_degree(std::size_t state) const;

  /// The forbidden set the automaton was built from.
  const std::vector<Word>& forbidden() const noexcept { return forbidden_; }

  /// State reached by reading `w` (ternary symbols 1/m) from `from`.
  std::optional<std::size_t> run(std::size_t from, const Word& w) const;

  /// Every state reachable from start and with at least one successor.
  bool is_trimmed() const;

  friend bool operator==(const Automaton&, const Automaton&) = default;

 private:
  std::size_t start_ = 0;
  std::vector<Row> rows_;
  std::vector<Word> forbidden_;
};

/// Prefix automaton of the forbidden set with failure links folded into
/// the transitions (Aho-Corasick goto function). States are the trie nodes
/// that do not end in a forbidden word; reading a forbidden factor is a
/// missing transition. Not trimmed: finite words that avoid every forbidden
/// factor are exactly the labels of paths from start, dead ends included.
///
/// Throws DomainError for an empty word or a symbol outside {1, m}.
Automaton build_factor_automaton(const std::vector<Word>& forbidden);

/// Removes states without an infinite continuation and states unreachable
/// from start. The result may be empty.
Automaton trim(const Automaton& a);

/// Merges states with the same future (Moore partition refinement).
Automaton minimize(const Automaton& a);

/// Renumbers states in breadth-first order from start, trying '1' before
/// 'm'. Deterministic automata are isomorphic iff canonical forms coincide.
Automaton canonicalize(const Automaton& a);

/// trim, minimize and canonicalize the factor automaton: the labels of its
/// infinite paths are exactly the sequences in {1,m}^inf avoiding every
/// forbidden factor.
Automaton build_safety_automaton(const std::vector<Word>& forbidden);

/// Structural isomorphism preserving start state and letters.
bool isomorphic(const Automaton& a, const Automaton& b);

/// Convenience: forbidden words given as glyph strings ("1mm1").
std::vector<Word> words_from_glyphs(const std::vector<std::string_view>& glyphs);

}  // namespace univoque
