#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "univoque/automaton.hpp"

namespace univoque {

enum class GrowthKind { Empty, FinitePaths, CountablyInfinite, Uncountable };

/// Cycle-structure evidence behind a GrowthClass.
struct GrowthEvidence {
  /// Uncountable: a strongly connected component with more internal edges
  /// than states, hence two distinct cycles.
  std::vector<std::size_t> branching_component;
  std::size_t internal_edges = 0;
  /// CountablyInfinite: two cyclic components, the second reachable from
  /// the first.
  std::vector<std::size_t> from_cycle;
  std::vector<std::size_t> to_cycle;
  /// FinitePaths: per terminal cycle, the number of infinite paths ending in
  /// it (one per distinct lasso).
  std::vector<std::uint64_t> census;
};

struct GrowthClass {
  GrowthKind kind = GrowthKind::Empty;
  std::uint64_t path_count = 0;  // FinitePaths only
  GrowthEvidence evidence;
};

std::string_view to_string(GrowthKind kind);

/// Strongly connected components in reverse topological order (a component
/// is listed before every component that can reach it).
std::vector<std::vector<std::size_t>> strongly_connected_components(const Automaton& a);

/// Size of the set of infinite path labels:
///   Empty               no states;
///   Uncountable         some component has two distinct cycles;
///   CountablyInfinite   otherwise, some cycle reaches another cycle;
///   FinitePaths         otherwise, with the exact number of paths.
/// Throws DomainError for an untrimmed automaton.
GrowthClass classify_growth(const Automaton& a);

__extension__ typedef unsigned __int128 WordCount;

/// Number of length-n labels readable from start (n <= 64). Works on any
/// automaton, trimmed or not.
WordCount count_words(const Automaton& a, std::size_t n);
std::string to_string(WordCount count);

/// Dominant eigenvalue of the transition count matrix: the largest Perron
/// root over the cyclic components, each from 200 power iterations on
/// (A_C + I), which is primitive even when the component is periodic.
/// Throws DomainError for an empty or untrimmed automaton.
double growth_rate(const Automaton& a);

}  // namespace univoque
