#pragma once

#include <cstddef>

#include "univoque/sequence.hpp"

namespace univoque {

/// A floating-point value together with an absolute error bound. Verdicts
/// compare against max(error, comparison margin) so that rounding can never
/// decide a strict inequality on its own.
struct BoundedReal {
  double value = 0.0;
  double error = 0.0;
};

/// Default margin for strict inequalities between sequence values.
inline constexpr double kCompareMargin = 1e-9;

/// pi_q(c) = sum_{i>=1} c_i q^{-i}, evaluated in closed form for u v^inf:
/// no truncation. Throws DomainError for q <= 1.
double pi_eval(const EPSeq& seq, double q);
BoundedReal pi_eval_bounded(const EPSeq& seq, double q);

/// First `terms` summands of pi_q(c). Used as an oracle for pi_eval: the
/// difference is at most max|digit| q^{-terms} / (q - 1).
double pi_eval_truncated(const EPSeq& seq, double q, std::size_t terms);

/// pi_q(m - c_i) for a sequence over {1, m}: digitwise complement against the
/// top digit, equal to m/(q-1) - pi_q(c) but computed without cancellation.
/// Throws DomainError if the sequence is not ternary or contains digit 0.
double pi_complement(const EPSeq& seq, double q);

/// sum (c_i - a_1) q^{-i}: the value measured from the bottom digit.
double pi_excess(const EPSeq& seq, double q);

/// sum (a_J - c_i) q^{-i}: the value measured down from the top digit.
double pi_deficit(const EPSeq& seq, double q);

/// sum_{i=1}^{|w|} w_i q^{-i} for a finite word.
double pi_word(const Word& word, const Alphabet& alphabet, double q);

/// Complement sum of a finite word over {1, m}: sum (m - w_i) q^{-i}.
double pi_word_complement(const Word& word, double m, double q);

}  // namespace univoque
