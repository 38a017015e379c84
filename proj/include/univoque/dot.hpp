#pragma once

#include <string>
#include <string_view>

#include "univoque/automaton.hpp"

namespace univoque {

/// Graphviz rendering. States appear as s0, s1, ... in index order with
/// edges labelled "1" / "m"; an invisible point node marks the start. The
/// output only depends on the automaton, so canonical automata give
/// byte-identical text.
std::string export_dot(const Automaton& a, std::string_view graph_name = "safety");

}  // namespace univoque
