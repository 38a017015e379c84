#include "univoque/growth.hpp"

#include <algorithm>
#include <functional>
#include <limits>

#include "univoque/error.hpp"

namespace univoque {

std::string_view to_string(GrowthKind kind) {
  switch (kind) {
    case GrowthKind::Empty: return "Empty";
    case GrowthKind::FinitePaths: return "FinitePaths";
    case GrowthKind::CountablyInfinite: return "CountablyInfinite";
    case GrowthKind::Uncountable: return "Uncountable";
  }
  return "?";
}

std::vector<std::vector<std::size_t>> strongly_connected_components(const Automaton& a) {
  // Tarjan
  const std::size_t n = a.size();
  constexpr std::size_t kUnvisited = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> index(n, kUnvisited), low(n, 0);
  std::vector<bool> on_stack(n, false);
  std::vector<std::size_t> stack;
  std::vector<std::vector<std::size_t>> out;
  std::size_t counter = 0;

  std::function<void(std::size_t)> visit = [&](std::size_t v) {
    index[v] = low[v] = counter++;
    stack.push_back(v);
    on_stack[v] = true;
    for (std::size_t w : a.rows()[v]) {
      if (w == Automaton::kNone) continue;
      if (index[w] == kUnvisited) {
        visit(w);
        low[v] = std::min(low[v], low[w]);
      } else if (on_stack[w]) {
        low[v] = std::min(low[v], index[w]);
      }
    }
    if (low[v] == index[v]) {
      std::vector<std::size_t> component;
      std::size_t w;
      do {
        w = stack.back();
        stack.pop_back();
        on_stack[w] = false;
        component.push_back(w);
      } while (w != v);
      std::sort(component.begin(), component.end());
      out.push_back(std::move(component));
    }
  };
  for (std::size_t v = 0; v < n; ++v) {
    if (index[v] == kUnvisited) visit(v);
  }
  return out;
}

namespace {

struct ComponentInfo {
  std::vector<std::vector<std::size_t>> components;
  std::vector<std::size_t> component_of;
  std::vector<std::size_t> internal_edges;
};

ComponentInfo analyze(const Automaton& a) {
  ComponentInfo info;
  info.components = strongly_connected_components(a);
  info.component_of.assign(a.size(), 0);
  for (std::size_t c = 0; c < info.components.size(); ++c) {
    for (std::size_t s : info.components[c]) info.component_of[s] = c;
  }
  info.internal_edges.assign(info.components.size(), 0);
  for (std::size_t s = 0; s < a.size(); ++s) {
    for (std::size_t t : a.rows()[s]) {
      if (t != Automaton::kNone && info.component_of[t] == info.component_of[s]) {
        ++info.internal_edges[info.component_of[s]];
      }
    }
  }
  return info;
}

bool is_cyclic(const ComponentInfo& info, std::size_t c) { return info.internal_edges[c] > 0; }

void require_trimmed(const Automaton& a) {
  if (!a.is_trimmed()) throw DomainError("automaton must be trimmed");
}

}  // namespace

GrowthClass classify_growth(const Automaton& a) {
  require_trimmed(a);
  GrowthClass result;
  if (a.empty()) return result;
  const ComponentInfo info = analyze(a);
  const std::size_t k = info.components.size();

  for (std::size_t c = 0; c < k; ++c) {
    if (info.internal_edges[c] > info.components[c].size()) {
      result.kind = GrowthKind::Uncountable;
      result.evidence.branching_component = info.components[c];
      result.evidence.internal_edges = info.internal_edges[c];
      return result;
    }
  }

  // Every cyclic component is now a simple cycle. Look for a cycle that
  // reaches a different cycle.
  for (std::size_t c = 0; c < k; ++c) {
    if (!is_cyclic(info, c)) continue;
    std::vector<bool> seen(k, false);
    std::vector<std::size_t> stack{c};
    seen[c] = true;
    while (!stack.empty()) {
      const std::size_t d = stack.back();
      stack.pop_back();
      if (d != c && is_cyclic(info, d)) {
        result.kind = GrowthKind::CountablyInfinite;
        result.evidence.from_cycle = info.components[c];
        result.evidence.to_cycle = info.components[d];
        return result;
      }
      for (std::size_t s : info.components[d]) {
        for (std::size_t t : a.rows()[s]) {
          if (t == Automaton::kNone) continue;
          const std::size_t e = info.component_of[t];
          if (!seen[e]) {
            seen[e] = true;
            stack.push_back(e);
          }
        }
      }
    }
  }

  // Isolated cycles with no exits: count the acyclic approaches to each.
  result.kind = GrowthKind::FinitePaths;
  std::vector<std::uint64_t> ways(a.size(), 0);
  std::vector<std::uint64_t> census(k, 0);
  ways[a.start()] = 1;
  for (std::size_t c = k; c-- > 0;) {  // topological order
    if (is_cyclic(info, c)) {
      if (info.component_of[a.start()] == c) census[c] += 1;
      continue;
    }
    const std::size_t u = info.components[c].front();
    for (std::size_t t : a.rows()[u]) {
      if (t == Automaton::kNone) continue;
      if (is_cyclic(info, info.component_of[t])) {
        census[info.component_of[t]] += ways[u];
      } else {
        ways[t] += ways[u];
      }
    }
  }
  for (std::size_t c = k; c-- > 0;) {
    if (!is_cyclic(info, c)) continue;
    result.evidence.census.push_back(census[c]);
    result.path_count += census[c];
  }
  return result;
}

WordCount count_words(const Automaton& a, std::size_t n) {
  if (n > 64) throw DomainError("count_words supports n <= 64");
  if (a.empty()) return 0;
  std::vector<WordCount> current(a.size(), 0), next(a.size(), 0);
  current[a.start()] = 1;
  for (std::size_t step = 0; step < n; ++step) {
    std::fill(next.begin(), next.end(), 0);
    for (std::size_t s = 0; s < a.size(); ++s) {
      if (current[s] == 0) continue;
      for (std::size_t t : a.rows()[s]) {
        if (t != Automaton::kNone) next[t] += current[s];
      }
    }
    std::swap(current, next);
  }
  WordCount total = 0;
  for (WordCount c : current) total += c;
  return total;
}

std::string to_string(WordCount count) {
  if (count == 0) return "0";
  std::string digits;
  while (count > 0) {
    digits.push_back(static_cast<char>('0' + static_cast<int>(count % 10)));
    count /= 10;
  }
  std::reverse(digits.begin(), digits.end());
  return digits;
}

double growth_rate(const Automaton& a) {
  require_trimmed(a);
  if (a.empty()) throw DomainError("growth rate of an empty automaton is undefined");
  const ComponentInfo info = analyze(a);
  double rate = 0.0;
  for (std::size_t c = 0; c < info.components.size(); ++c) {
    if (!is_cyclic(info, c)) continue;
    const std::vector<std::size_t>& states = info.components[c];
    std::vector<double> x(a.size(), 0.0), y(a.size(), 0.0);
    for (std::size_t s : states) x[s] = 1.0 / static_cast<double>(states.size());
    double lambda = 0.0;
    for (int iter = 0; iter < 200; ++iter) {
      for (std::size_t s : states) y[s] = x[s];
      for (std::size_t s : states) {
        for (std::size_t t : a.rows()[s]) {
          if (t != Automaton::kNone && info.component_of[t] == c) y[t] += x[s];
        }
      }
      double norm = 0.0;
      for (std::size_t s : states) norm += y[s];
      lambda = norm;  // ||x||_1 == 1
      for (std::size_t s : states) x[s] = y[s] / norm;
    }
    rate = std::max(rate, lambda - 1.0);
  }
  return rate;
}

}  // namespace univoque
