#include "univoque/dot.hpp"

#include <sstream>

#include "univoque/alphabet.hpp"
#include "univoque/sequence.hpp"

namespace univoque {

std::string export_dot(const Automaton& a, std::string_view graph_name) {
  std::ostringstream out;
  out << "digraph " << graph_name << " {\n";
  out << "  rankdir=LR;\n";
  if (!a.forbidden().empty()) {
    out << "  // forbidden:";
    const Alphabet glyphs = Alphabet::ternary(2.0);
    for (const Word& w : a.forbidden()) out << ' ' << spell(w, glyphs);
    out << '\n';
  }
  out << "  node [shape=circle];\n";
  if (a.empty()) {
    out << "}\n";
    return out.str();
  }
  out << "  start [shape=point];\n";
  for (std::size_t s = 0; s < a.size(); ++s) out << "  s" << s << ";\n";
  out << "  start -> s" << a.start() << ";\n";
  for (std::size_t s = 0; s < a.size(); ++s) {
    for (Letter l : kLetters) {
      const std::size_t t = a.next(s, l);
      if (t == Automaton::kNone) continue;
      out << "  s" << s << " -> s" << t << " [label=\"" << glyph_of(l) << "\"];\n";
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace univoque
