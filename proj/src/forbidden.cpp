#include "univoque/forbidden.hpp"

#include <cmath>

#include "univoque/error.hpp"
#include "univoque/evaluate.hpp"
#include "univoque/uniqueness.hpp"

namespace univoque {

namespace {

void require_zero_free_range(double m, double q) {
  if (!(m >= 2.0)) throw DomainError("requires m >= 2");
  if (!(q > 2.0) || q > zero_free_iff_threshold(m) * (1.0 + 1e-12)) {
    throw DomainError("forbidden-block tests need 2 < q <= R_m");
  }
}

void require_one_m(const Word& w) {
  for (Symbol s : w) letter_of(s);
}

}  // namespace

bool is_forbidden_block(const Word& w, double m, double q) {
  require_zero_free_range(m, q);
  if (w.empty()) throw DomainError("block suffix must be nonempty");
  require_one_m(w);
  const Alphabet alphabet = Alphabet::ternary(m);
  const double with_ones = pi_eval(EPSeq(alphabet, w, Word{ternary::kOne}), q);
  if (with_ones >= m - 1.0 - kCompareMargin) return true;
  // pi_q(w m^inf) <= m/(q-1) - 1  <=>  pi_q(m - w m^inf) >= 1
  return pi_word_complement(w, m, q) >= 1.0 - kCompareMargin;
}

std::vector<Word> scan_forbidden(double m, double q, std::size_t max_length) {
  require_zero_free_range(m, q);
  if (max_length < 1 || max_length > 16) {
    throw DomainError("scan length must lie in [1, 16]");
  }
  std::vector<Word> found;
  for (std::size_t length = 2; length <= max_length; ++length) {
    const std::size_t tail = length - 1;
    for (std::uint32_t bits = 0; bits < (1u << tail); ++bits) {
      Word w;
      for (std::size_t i = 0; i < tail; ++i) {
        const bool is_m = (bits >> (tail - 1 - i)) & 1u;
        w.push_back(is_m ? ternary::kM : ternary::kOne);
      }
      if (!is_forbidden_block(w, m, q)) continue;
      Word block = Word{ternary::kOne} + w;
      bool minimal = true;
      for (const Word& shorter : found) {
        if (block.contains(shorter)) {
          minimal = false;
          break;
        }
      }
      if (minimal) found.push_back(std::move(block));
    }
  }
  return found;
}

Word extremal_label(const Automaton& a, std::size_t from, std::size_t depth, bool largest) {
  if (!a.is_trimmed()) throw DomainError("automaton must be trimmed");
  std::vector<bool> frontier(a.size(), false);
  frontier.at(from) = true;
  Word label;
  for (std::size_t step = 0; step < depth; ++step) {
    const Letter order[2] = {largest ? Letter::M : Letter::One,
                             largest ? Letter::One : Letter::M};
    for (Letter l : order) {
      std::vector<bool> next(a.size(), false);
      bool any = false;
      for (std::size_t s = 0; s < a.size(); ++s) {
        if (!frontier[s]) continue;
        const std::size_t t = a.next(s, l);
        if (t != Automaton::kNone) {
          next[t] = true;
          any = true;
        }
      }
      if (any) {
        label.push_back(symbol_of(l));
        frontier = std::move(next);
        break;
      }
    }
  }
  return label;
}

bool is_forbidden_in_language(const Word& block, const Automaton& known, double m, double q,
                              std::size_t depth) {
  require_zero_free_range(m, q);
  if (block.empty() || block[0] != ternary::kOne) {
    throw DomainError("block must start with the digit 1");
  }
  require_one_m(block);
  if (!known.is_trimmed()) throw DomainError("automaton must be trimmed");
  const Word after_one = block.sub(1);
  const double remainder = std::pow(q, -static_cast<double>(after_one.size() + depth)) / (q - 1.0);
  const Alphabet alphabet = Alphabet::ternary(m);
  for (std::size_t s = 0; s < known.size(); ++s) {
    const auto reached = known.run(s, block);
    if (!reached) continue;
    const Word low = after_one + extremal_label(known, *reached, depth, /*largest=*/false);
    const Word high = after_one + extremal_label(known, *reached, depth, /*largest=*/true);
    const double tail_inf = pi_word(low, alphabet, q) + remainder;
    const double complement_inf = pi_word_complement(high, m, q);
    const bool violates = tail_inf >= m - 1.0 - kCompareMargin ||
                          complement_inf >= 1.0 - kCompareMargin;
    if (!violates) return false;
  }
  return true;
}

}  // namespace univoque
