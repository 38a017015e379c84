#include "univoque/family.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <utility>

#include "univoque/automaton.hpp"
#include "univoque/error.hpp"
#include "univoque/evaluate.hpp"

namespace univoque {

namespace {

// (block, offset): the next symbol to read is blocks[block][offset].
using Cursor = std::pair<std::size_t, std::size_t>;

class FamilyWalker {
 public:
  explicit FamilyWalker(const std::vector<Word>& blocks) : blocks_(blocks) {}

  // Cursors reachable after reading the symbol under `c`.
  void advance(const Cursor& c, std::set<Cursor>& out) const {
    if (c.second + 1 < blocks_[c.first].size()) {
      out.emplace(c.first, c.second + 1);
      return;
    }
    for (std::size_t b = 0; b < blocks_.size(); ++b) out.emplace(b, 0);
  }

  Word extremal(std::set<Cursor> frontier, std::size_t depth, bool largest) const {
    Word label;
    for (std::size_t step = 0; step < depth; ++step) {
      Symbol best = largest ? Symbol{0} : std::numeric_limits<Symbol>::max();
      for (const Cursor& c : frontier) {
        const Symbol s = blocks_[c.first][c.second];
        best = largest ? std::max(best, s) : std::min(best, s);
      }
      std::set<Cursor> next;
      for (const Cursor& c : frontier) {
        if (blocks_[c.first][c.second] == best) advance(c, next);
      }
      label.push_back(best);
      frontier = std::move(next);
    }
    return label;
  }

 private:
  const std::vector<Word>& blocks_;
};

bool has_noncommuting_pair(const std::vector<Word>& blocks) {
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    for (std::size_t j = i + 1; j < blocks.size(); ++j) {
      if (blocks[i] + blocks[j] != blocks[j] + blocks[i]) return true;
    }
  }
  return false;
}

}  // namespace

FamilyCertificate certify_family(const FamilySpec& family, double m, double q,
                                 std::size_t depth) {
  if (!(m >= 2.0)) throw DomainError("requires m >= 2");
  if (!(q > 2.0)) throw DomainError("family certification needs q > 2");
  if (family.blocks.empty()) throw DomainError("family needs at least one block");
  if (depth == 0) throw DomainError("depth must be positive");
  for (const Word& b : family.blocks) {
    if (b.empty()) throw DomainError("family blocks must be nonempty");
    for (Symbol s : b) letter_of(s);
  }

  const FamilyWalker walker(family.blocks);
  const double scale = std::pow(q, -static_cast<double>(depth)) / (q - 1.0);
  FamilyCertificate cert;
  cert.tail_bound = -std::numeric_limits<double>::infinity();
  cert.complement_bound = -std::numeric_limits<double>::infinity();
  const Alphabet alphabet = Alphabet::ternary(m);
  for (std::size_t b = 0; b < family.blocks.size(); ++b) {
    for (std::size_t j = 0; j < family.blocks[b].size(); ++j) {
      if (family.blocks[b][j] != ternary::kOne) continue;
      std::set<Cursor> start;
      walker.advance({b, j}, start);
      const Word high = walker.extremal(start, depth, /*largest=*/true);
      const Word low = walker.extremal(start, depth, /*largest=*/false);
      const double tail_sup = pi_word(high, alphabet, q) + m * scale;
      const double complement_sup = pi_word_complement(low, m, q) + (m - 1.0) * scale;
      cert.tail_bound = std::max(cert.tail_bound, tail_sup);
      cert.complement_bound = std::max(cert.complement_bound, complement_sup);
    }
  }
  if (cert.tail_bound == -std::numeric_limits<double>::infinity()) {
    // no digit 1 anywhere: only m^inf
    cert.tail_bound = 0.0;
    cert.complement_bound = 0.0;
  }
  cert.certified = cert.tail_bound < m - 1.0 - kCompareMargin &&
                   cert.complement_bound < 1.0 - kCompareMargin;
  cert.uncountable = cert.certified && has_noncommuting_pair(family.blocks);
  return cert;
}

}  // namespace univoque
