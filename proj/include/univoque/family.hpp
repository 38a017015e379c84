#pragma once

#include <cstddef>
#include <vector>

#include "univoque/sequence.hpp"

namespace univoque {

/// The set blocks^inf of infinite concatenations of the given blocks
/// (ternary symbols 1/m, each block nonempty).
struct FamilySpec {
  std::vector<Word> blocks;
};

struct FamilyCertificate {
  bool certified = false;
  /// certified and two blocks that do not commute, so blocks^inf is
  /// uncountable.
  bool uncountable = false;
  /// Largest upper bound of pi_q(tail) over tails following a digit 1.
  double tail_bound = 0.0;
  /// Largest upper bound of pi_q(m - tail) over the same tails.
  double complement_bound = 0.0;
};

/// One-sided certificate that blocks^inf lies in the zero-free univoque set
/// for base q > 2.
///
/// Tails after a digit 1 start inside a block and continue with any element
/// of blocks^inf. For each such start the lexicographically largest and
/// smallest continuation of length `depth` is found by breadth-first greedy
/// search over (block, offset) states; with q > 2 these bound pi_q from above
/// and below, up to a remainder of m q^{-depth} / (q - 1). Certified iff both
///
///   tail_bound < m - 1 - eps   and   complement_bound < 1 - eps.
///
/// Not certified does not disprove membership.
FamilyCertificate certify_family(const FamilySpec& family, double m, double q,
                                 std::size_t depth = 64);

}  // namespace univoque
