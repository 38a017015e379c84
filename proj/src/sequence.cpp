#include "univoque/sequence.hpp"

#include <algorithm>
#include <numeric>

#include "univoque/error.hpp"

namespace univoque {

Word& Word::operator+=(const Word& other) {
  symbols_.insert(symbols_.end(), other.symbols_.begin(), other.symbols_.end());
  return *this;
}

Word Word::repeated(std::size_t count) const {
  Word out;
  out.symbols_.reserve(symbols_.size() * count);
  for (std::size_t i = 0; i < count; ++i) out += *this;
  return out;
}

Word Word::sub(std::size_t from, std::size_t length) const {
  if (from >= symbols_.size()) return {};
  length = std::min(length, symbols_.size() - from);
  return Word(std::vector<Symbol>(symbols_.begin() + from,
                                  symbols_.begin() + from + length));
}

bool Word::contains(const Word& needle) const {
  return std::search(symbols_.begin(), symbols_.end(), needle.symbols_.begin(),
                     needle.symbols_.end()) != symbols_.end();
}

std::string spell(const Word& word, const Alphabet& alphabet) {
  std::string out;
  out.reserve(word.size());
  for (Symbol s : word) out.push_back(alphabet.glyph(s));
  return out;
}

namespace {

// Shortest d dividing |w| such that w is d-periodic.
Word primitive_root(const Word& w) {
  const std::size_t n = w.size();
  for (std::size_t d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    bool periodic = true;
    for (std::size_t i = d; i < n && periodic; ++i) {
      periodic = w[i] == w[i - d];
    }
    if (periodic) return w.sub(0, d);
  }
  return w;
}

Word rotate_left(const Word& w, std::size_t k) {
  if (w.empty()) return w;
  k %= w.size();
  return w.sub(k) + w.sub(0, k);
}

}  // namespace

EPSeq::EPSeq(Alphabet alphabet, Word preperiod, Word period)
    : alphabet_(std::move(alphabet)),
      preperiod_(std::move(preperiod)),
      period_(std::move(period)) {
  if (period_.empty()) throw DomainError("period must be nonempty");
  for (const Word* w : {&preperiod_, &period_}) {
    for (Symbol s : *w) {
      if (s >= alphabet_.size()) throw DomainError("symbol outside alphabet");
    }
  }
  period_ = primitive_root(period_);
  // u a (v a)^inf == u (a v)^inf
  std::size_t keep = preperiod_.size();
  const std::size_t n = period_.size();
  std::size_t rotation = 0;
  while (keep > 0 && preperiod_[keep - 1] == period_[n - 1 - rotation % n]) {
    --keep;
    ++rotation;
  }
  if (keep != preperiod_.size()) {
    preperiod_ = preperiod_.sub(0, keep);
    period_ = rotate_left(period_, n - rotation % n);
  }
}

Symbol EPSeq::at(std::size_t i) const noexcept {
  if (i < preperiod_.size()) return preperiod_[i];
  return period_[(i - preperiod_.size()) % period_.size()];
}

bool EPSeq::uses(Symbol s) const noexcept {
  return std::find(preperiod_.begin(), preperiod_.end(), s) != preperiod_.end() ||
         std::find(period_.begin(), period_.end(), s) != period_.end();
}

Order lex_cmp(const EPSeq& a, const EPSeq& b) {
  const std::size_t horizon =
      std::max(a.preperiod().size(), b.preperiod().size()) +
      std::lcm(a.period().size(), b.period().size());
  for (std::size_t i = 0; i < horizon; ++i) {
    const Symbol x = a.at(i);
    const Symbol y = b.at(i);
    if (x < y) return Order::Less;
    if (x > y) return Order::Greater;
  }
  return Order::Equal;
}

EPSeq shift(const EPSeq& seq, std::size_t n) {
  const Word& pre = seq.preperiod();
  if (n <= pre.size()) {
    return EPSeq(seq.alphabet(), pre.sub(n), seq.period());
  }
  return EPSeq(seq.alphabet(), Word{},
               rotate_left(seq.period(), (n - pre.size()) % seq.period().size()));
}

Word ternary_word(std::string_view glyphs) {
  Word w;
  for (char c : glyphs) {
    switch (c) {
      case '0': w.push_back(ternary::kZero); break;
      case '1': w.push_back(ternary::kOne); break;
      case 'm': w.push_back(ternary::kM); break;
      default:
        throw DomainError(std::string("not a ternary glyph: '") + c + "'");
    }
  }
  return w;
}

EPSeq ternary_seq(double m, std::string_view preperiod, std::string_view period) {
  return EPSeq(Alphabet::ternary(m), ternary_word(preperiod), ternary_word(period));
}

}  // namespace univoque
