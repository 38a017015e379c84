#include "univoque/automaton.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include "univoque/error.hpp"

namespace univoque {

Letter letter_of(Symbol s) {
  switch (s) {
    case ternary::kOne: return Letter::One;
    case ternary::kM: return Letter::M;
    default: throw DomainError("only the digits 1 and m are allowed here");
  }
}

Symbol symbol_of(Letter l) { return l == Letter::One ? ternary::kOne : ternary::kM; }

char glyph_of(Letter l) { return l == Letter::One ? '1' : 'm'; }

Automaton::Automaton(std::size_t start, std::vector<Row> transitions,
                     std::vector<Word> forbidden)
    : start_(start), rows_(std::move(transitions)), forbidden_(std::move(forbidden)) {
  if (rows_.empty()) {
    start_ = 0;
    return;
  }
  if (start_ >= rows_.size()) throw DomainError("start state out of range");
  for (const Row& row : rows_) {
    for (std::size_t t : row) {
      if (t != kNone && t >= rows_.size()) throw DomainError("transition target out of range");
    }
  }
}

std::size_t Automaton::edge_count() const noexcept {
  std::size_t n = 0;
  for (const Row& row : rows_) {
    for (std::size_t t : row) n += t != kNone;
  }
  return n;
}

std::size_t Automaton::out_degree(std::size_t state) const {
  const Row& row = rows_.at(state);
  return static_cast<std::size_t>(row[0] != kNone) + static_cast<std::size_t>(row[1] != kNone);
}

std::optional<std::size_t> Automaton::run(std::size_t from, const Word& w) const {
  std::size_t state = from;
  for (Symbol s : w) {
    state = next(state, letter_of(s));
    if (state == kNone) return std::nullopt;
  }
  return state;
}

bool Automaton::is_trimmed() const {
  if (empty()) return true;
  std::vector<bool> seen(size(), false);
  std::vector<std::size_t> stack{start_};
  seen[start_] = true;
  while (!stack.empty()) {
    const std::size_t s = stack.back();
    stack.pop_back();
    if (out_degree(s) == 0) return false;
    for (std::size_t t : rows_[s]) {
      if (t != kNone && !seen[t]) {
        seen[t] = true;
        stack.push_back(t);
      }
    }
  }
  return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

Automaton build_factor_automaton(const std::vector<Word>& forbidden) {
  struct Node {
    std::array<std::size_t, 2> child{Automaton::kNone, Automaton::kNone};
    std::size_t fail = 0;
    bool hit = false;
  };
  std::vector<Node> trie(1);
  for (const Word& w : forbidden) {
    if (w.empty()) throw DomainError("forbidden words must be nonempty");
    std::size_t node = 0;
    for (Symbol s : w) {
      const auto l = static_cast<std::size_t>(letter_of(s));
      if (trie[node].child[l] == Automaton::kNone) {
        trie[node].child[l] = trie.size();
        trie.emplace_back();
      }
      node = trie[node].child[l];
    }
    trie[node].hit = true;
  }

  // Breadth-first: complete the goto function through failure links and
  // propagate hits along them (a node is dead if any suffix is forbidden).
  std::deque<std::size_t> queue;
  for (std::size_t l = 0; l < 2; ++l) {
    std::size_t& c = trie[0].child[l];
    if (c == Automaton::kNone) {
      c = 0;
    } else {
      trie[c].fail = 0;
      queue.push_back(c);
    }
  }
  while (!queue.empty()) {
    const std::size_t u = queue.front();
    queue.pop_front();
    trie[u].hit = trie[u].hit || trie[trie[u].fail].hit;
    for (std::size_t l = 0; l < 2; ++l) {
      const std::size_t c = trie[u].child[l];
      if (c == Automaton::kNone) {
        trie[u].child[l] = trie[trie[u].fail].child[l];
      } else {
        trie[c].fail = trie[trie[u].fail].child[l];
        queue.push_back(c);
      }
    }
  }

  if (trie[0].hit) return Automaton({}, {}, forbidden);
  std::vector<std::size_t> id(trie.size(), Automaton::kNone);
  std::size_t live = 0;
  for (std::size_t i = 0; i < trie.size(); ++i) {
    if (!trie[i].hit) id[i] = live++;
  }
  std::vector<Automaton::Row> rows(live);
  for (std::size_t i = 0; i < trie.size(); ++i) {
    if (trie[i].hit) continue;
    for (std::size_t l = 0; l < 2; ++l) {
      const std::size_t t = trie[i].child[l];
      rows[id[i]][l] = trie[t].hit ? Automaton::kNone : id[t];
    }
  }
  return Automaton(id[0], std::move(rows), forbidden);
}

namespace {

// Restriction to `keep` (state -> kept?), dropping edges into removed states.
Automaton restrict_to(const Automaton& a, const std::vector<bool>& keep) {
  if (a.empty() || !keep[a.start()]) return Automaton({}, {}, a.forbidden());
  std::vector<std::size_t> id(a.size(), Automaton::kNone);
  std::size_t n = 0;
  for (std::size_t s = 0; s < a.size(); ++s) {
    if (keep[s]) id[s] = n++;
  }
  std::vector<Automaton::Row> rows(n);
  for (std::size_t s = 0; s < a.size(); ++s) {
    if (!keep[s]) continue;
    for (std::size_t l = 0; l < 2; ++l) {
      const std::size_t t = a.rows()[s][l];
      rows[id[s]][l] = (t != Automaton::kNone && keep[t]) ? id[t] : Automaton::kNone;
    }
  }
  return Automaton(id[a.start()], std::move(rows), a.forbidden());
}

}  // namespace

Automaton trim(const Automaton& a) {
  if (a.empty()) return a;
  const std::size_t n = a.size();
  // Greatest set of states each having a successor inside the set.
  std::vector<bool> alive(n, true);
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t s = 0; s < n; ++s) {
      if (!alive[s]) continue;
      bool has_successor = false;
      for (std::size_t t : a.rows()[s]) has_successor = has_successor || (t != Automaton::kNone && alive[t]);
      if (!has_successor) {
        alive[s] = false;
        changed = true;
      }
    }
  }
  if (!alive[a.start()]) return Automaton({}, {}, a.forbidden());
  std::vector<bool> reach(n, false);
  std::vector<std::size_t> stack{a.start()};
  reach[a.start()] = true;
  while (!stack.empty()) {
    const std::size_t s = stack.back();
    stack.pop_back();
    for (std::size_t t : a.rows()[s]) {
      if (t != Automaton::kNone && alive[t] && !reach[t]) {
        reach[t] = true;
        stack.push_back(t);
      }
    }
  }
  return restrict_to(a, reach);
}

Automaton minimize(const Automaton& a) {
  if (a.empty()) return a;
  const std::size_t n = a.size();
  std::vector<std::size_t> block(n, 0);
  std::size_t blocks = 1;
  for (;;) {
    std::map<std::array<std::size_t, 3>, std::size_t> signature;
    std::vector<std::size_t> refined(n);
    for (std::size_t s = 0; s < n; ++s) {
      std::array<std::size_t, 3> key{block[s], Automaton::kNone, Automaton::kNone};
      for (std::size_t l = 0; l < 2; ++l) {
        const std::size_t t = a.rows()[s][l];
        key[l + 1] = t == Automaton::kNone ? Automaton::kNone : block[t];
      }
      auto [it, inserted] = signature.emplace(key, signature.size());
      refined[s] = it->second;
    }
    const std::size_t count = signature.size();
    block = std::move(refined);
    if (count == blocks) break;
    blocks = count;
  }
  std::vector<Automaton::Row> rows(blocks, {Automaton::kNone, Automaton::kNone});
  for (std::size_t s = 0; s < n; ++s) {
    for (std::size_t l = 0; l < 2; ++l) {
      const std::size_t t = a.rows()[s][l];
      rows[block[s]][l] = t == Automaton::kNone ? Automaton::kNone : block[t];
    }
  }
  return Automaton(block[a.start()], std::move(rows), a.forbidden());
}

Automaton canonicalize(const Automaton& a) {
  if (a.empty()) return a;
  std::vector<std::size_t> id(a.size(), Automaton::kNone);
  std::vector<std::size_t> order{a.start()};
  id[a.start()] = 0;
  for (std::size_t head = 0; head < order.size(); ++head) {
    for (Letter l : kLetters) {
      const std::size_t t = a.next(order[head], l);
      if (t != Automaton::kNone && id[t] == Automaton::kNone) {
        id[t] = order.size();
        order.push_back(t);
      }
    }
  }
  std::vector<Automaton::Row> rows(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (std::size_t l = 0; l < 2; ++l) {
      const std::size_t t = a.rows()[order[i]][l];
      rows[i][l] = t == Automaton::kNone ? Automaton::kNone : id[t];
    }
  }
  return Automaton(0, std::move(rows), a.forbidden());
}

Automaton build_safety_automaton(const std::vector<Word>& forbidden) {
  return canonicalize(minimize(trim(build_factor_automaton(forbidden))));
}

bool isomorphic(const Automaton& a, const Automaton& b) {
  const Automaton ca = canonicalize(a);
  const Automaton cb = canonicalize(b);
  return ca.start() == cb.start() && ca.rows() == cb.rows();
}

std::vector<Word> words_from_glyphs(const std::vector<std::string_view>& glyphs) {
  std::vector<Word> out;
  out.reserve(glyphs.size());
  for (std::string_view g : glyphs) out.push_back(ternary_word(g));
  return out;
}

}  // namespace univoque
