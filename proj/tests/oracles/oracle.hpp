#pragma once

// Independent reference implementations used by the tests. They work on
// plain strings and long double digit sums and share no code with the
// library beyond what the caller passes in.

#include <cstdint>
#include <string>
#include <vector>

namespace oracle {

/// sum_{i=1}^{terms} c_i q^-i for c = pre per per ..., summed digit by digit.
long double digit_sum(const std::vector<double>& pre, const std::vector<double>& per, long double q,
                      std::size_t terms = 4000);

/// Digits of a glyph string over {0,1,m}.
std::vector<double> ternary_digits(const std::string& glyphs, double m);

/// Smallest slack of the gap conditions over positions 1..|pre|+|per|,
/// evaluated by digit sums. Positive means every condition holds.
long double min_gap_slack(const std::vector<double>& pre, const std::vector<double>& per,
                          const std::vector<double>& alphabet, long double q);

/// Length-n words over {1,m} with no factor in `forbidden` (2^n scan).
std::uint64_t count_avoiding(const std::vector<std::string>& forbidden, std::size_t n);

/// Same, restricted to words that extend to arbitrarily long words avoiding
/// `forbidden`.
std::uint64_t count_extendable(const std::vector<std::string>& forbidden, std::size_t n);

/// Every word over {1,m} of length n, lexicographic with '1' < 'm'.
std::vector<std::string> all_words(std::size_t n);

}  // namespace oracle
