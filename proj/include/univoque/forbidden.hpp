#pragma once

#include <cstddef>
#include <vector>

#include "univoque/automaton.hpp"
#include "univoque/sequence.hpp"

namespace univoque {

/// Sufficient test that the block 1w never occurs in a zero-free unique
/// expansion in base q (2 < q <= R_m): true iff
///
///   pi_q(w 1^inf) >= m - 1 - eps   or   pi_q(w m^inf) <= m/(q-1) - 1 + eps.
///
/// The margin eps = kCompareMargin makes blocks that sit exactly on a
/// boundary count as forbidden, matching the non-strict inequalities.
/// `w` is a nonempty word of ternary symbols 1/m. Throws DomainError
/// otherwise or when q is outside (2, R_m].
bool is_forbidden_block(const Word& w, double m, double q);

/// Every block 1w with |1w| <= max_length flagged by is_forbidden_block,
/// reduced to the blocks containing no other listed block as a factor.
/// Sorted by length, then lexicographically ('1' < 'm').
/// Requires 1 <= max_length <= 16.
std::vector<Word> scan_forbidden(double m, double q, std::size_t max_length);

/// Forbidden-block test relative to a safety automaton describing what is
/// already known to be excluded. `block` (starting with 1) is forbidden if,
/// at every state from which it can be read, every continuation allowed by
/// the automaton violates one of the two conditions at the leading 1:
///
///   inf pi_q(tail) >= m - 1 - eps   or   inf pi_q(m - tail) >= 1 - eps.
///
/// Infima come from the lexicographically extreme continuation, followed
/// for `depth` symbols with a rigorous bound on the remainder. A block that
/// cannot be read anywhere is trivially forbidden. Requires a trimmed
/// automaton and 2 < q <= R_m.
bool is_forbidden_in_language(const Word& block, const Automaton& known, double m, double q,
                              std::size_t depth = 64);

/// Lexicographically largest (or smallest) label of length `depth` of a
/// path starting at `from`. The automaton must be trimmed.
Word extremal_label(const Automaton& a, std::size_t from, std::size_t depth, bool largest);

}  // namespace univoque
