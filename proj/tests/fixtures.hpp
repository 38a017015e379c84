#pragma once

// Hand-transcribed automata from the two published state diagrams for the
// seven and eight forbidden words. States are letters; start is A.

#include <array>
#include <string_view>
#include <vector>

#include "univoque/automaton.hpp"

namespace fixtures {

struct Edge {
  char from;
  char letter;  // '1' or 'm'
  char to;
};

inline univoque::Automaton from_edges(std::size_t states, const std::vector<Edge>& edges) {
  using univoque::Automaton;
  std::vector<Automaton::Row> rows(states, Automaton::Row{Automaton::kNone, Automaton::kNone});
  for (const Edge& e : edges) {
    rows[static_cast<std::size_t>(e.from - 'A')][e.letter == '1' ? 0 : 1] =
        static_cast<std::size_t>(e.to - 'A');
  }
  return Automaton(0, rows);
}

// Nine states A..I.
inline univoque::Automaton seven_word_reference() {
  return from_edges(9, {{'A', 'm', 'A'},
                        {'A', '1', 'B'},
                        {'B', '1', 'C'},
                        {'B', 'm', 'D'},
                        {'C', 'm', 'G'},
                        {'D', '1', 'B'},
                        {'D', 'm', 'E'},
                        {'E', '1', 'F'},
                        {'F', '1', 'C'},
                        {'F', 'm', 'H'},
                        {'G', 'm', 'E'},
                        {'H', '1', 'I'},
                        {'I', '1', 'C'}});
}

// Seven states A..G: the nine-state diagram without H and I.
inline univoque::Automaton eight_word_reference() {
  return from_edges(7, {{'A', 'm', 'A'},
                        {'A', '1', 'B'},
                        {'B', '1', 'C'},
                        {'B', 'm', 'D'},
                        {'C', 'm', 'G'},
                        {'D', '1', 'B'},
                        {'D', 'm', 'E'},
                        {'E', '1', 'F'},
                        {'F', '1', 'C'},
                        {'G', 'm', 'E'}});
}

inline const std::vector<std::string_view> kSevenWords = {"111",    "1mmm",    "11m11",  "11m1m1",
                                                          "1mm1mm", "11m1mm1", "1mm1m1m"};
inline constexpr std::string_view kEighthWord = "1mm1m11mm1";

inline std::vector<std::string_view> eight_words() {
  std::vector<std::string_view> w = kSevenWords;
  w.push_back(kEighthWord);
  return w;
}

}  // namespace fixtures
