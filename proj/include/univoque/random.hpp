#pragma once

#include <cstddef>
#include <random>

#include "univoque/sequence.hpp"

namespace univoque {

using Rng = std::mt19937_64;

/// Uniform random word of the given length over the symbols [lo, hi].
Word random_word(Rng& rng, std::size_t length, Symbol lo, Symbol hi);

/// Random sequence over the whole alphabet with |pre| <= max_pre and
/// 1 <= |per| <= max_per (before canonicalization).
EPSeq random_seq(Rng& rng, const Alphabet& alphabet, std::size_t max_pre = 6,
                 std::size_t max_per = 6);

/// Random sequence over {1, m} of the ternary alphabet.
EPSeq random_zero_free_seq(Rng& rng, double m, std::size_t max_pre = 6,
                           std::size_t max_per = 6);

double random_real(Rng& rng, double lo, double hi);

}  // namespace univoque
