#include "univoque/evaluate.hpp"

#include <cmath>
#include <limits>

#include "univoque/error.hpp"

namespace univoque {

namespace {

void require_base(double q) {
  if (!(q > 1.0) || !std::isfinite(q)) {
    throw DomainError("base q must satisfy q > 1");
  }
}

// Horner: (w_1 + (w_2 + ... (w_k + seed)/q ...)/q)/q
template <typename DigitOf>
double horner(const Word& w, double q, double seed, DigitOf digit_of) {
  double s = seed;
  for (std::size_t i = w.size(); i-- > 0;) s = (s + digit_of(w[i])) / q;
  return s;
}

template <typename DigitOf>
double periodic_value(const EPSeq& seq, double q, DigitOf digit_of) {
  const Word& v = seq.period();
  // sum_j v_j q^{-j} / (1 - q^{-|v|})
  const double head = horner(v, q, 0.0, digit_of);
  const double denom = -std::expm1(-static_cast<double>(v.size()) * std::log(q));
  const double tail = head / denom;
  return horner(seq.preperiod(), q, tail, digit_of);
}

void require_zero_free_ternary(const EPSeq& seq) {
  if (!seq.alphabet().is_ternary()) {
    throw DomainError("complement evaluation needs the alphabet {0,1,m}");
  }
  if (seq.uses(ternary::kZero)) {
    throw DomainError("complement evaluation needs a sequence over {1,m}");
  }
}

}  // namespace

double pi_eval(const EPSeq& seq, double q) {
  require_base(q);
  const Alphabet& a = seq.alphabet();
  return periodic_value(seq, q, [&a](Symbol s) { return a.digit(s); });
}

BoundedReal pi_eval_bounded(const EPSeq& seq, double q) {
  const double value = pi_eval(seq, q);
  const Alphabet& a = seq.alphabet();
  const double magnitude = std::max(std::abs(a.min()), std::abs(a.max())) / (q - 1.0);
  const double steps = static_cast<double>(seq.distinct_tail_count() + 4);
  return {value, 4.0 * steps * std::numeric_limits<double>::epsilon() * magnitude};
}

double pi_eval_truncated(const EPSeq& seq, double q, std::size_t terms) {
  require_base(q);
  double sum = 0.0;
  double scale = 1.0;
  for (std::size_t i = 0; i < terms; ++i) {
    scale /= q;
    sum += seq.digit_at(i) * scale;
  }
  return sum;
}

double pi_excess(const EPSeq& seq, double q) {
  require_base(q);
  const Alphabet& a = seq.alphabet();
  return periodic_value(seq, q, [&a](Symbol s) { return a.digit(s) - a.min(); });
}

double pi_deficit(const EPSeq& seq, double q) {
  require_base(q);
  const Alphabet& a = seq.alphabet();
  return periodic_value(seq, q, [&a](Symbol s) { return a.max() - a.digit(s); });
}

double pi_complement(const EPSeq& seq, double q) {
  require_base(q);
  require_zero_free_ternary(seq);
  return pi_deficit(seq, q);
}

double pi_word(const Word& word, const Alphabet& alphabet, double q) {
  require_base(q);
  return horner(word, q, 0.0, [&alphabet](Symbol s) { return alphabet.digit(s); });
}

double pi_word_complement(const Word& word, double m, double q) {
  require_base(q);
  return horner(word, q, 0.0, [m](Symbol s) {
    if (s == ternary::kZero) throw DomainError("complement of digit 0 is undefined");
    return s == ternary::kM ? 0.0 : m - 1.0;
  });
}

}  // namespace univoque
