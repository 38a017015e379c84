#include "univoque/random.hpp"

#include "univoque/alphabet.hpp"

namespace univoque {

Word random_word(Rng& rng, std::size_t length, Symbol lo, Symbol hi) {
  std::uniform_int_distribution<int> pick(lo, hi);
  Word w;
  for (std::size_t i = 0; i < length; ++i) w.push_back(static_cast<Symbol>(pick(rng)));
  return w;
}

namespace {

std::size_t random_length(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

}  // namespace

EPSeq random_seq(Rng& rng, const Alphabet& alphabet, std::size_t max_pre, std::size_t max_per) {
  const auto top = static_cast<Symbol>(alphabet.size() - 1);
  Word pre = random_word(rng, random_length(rng, 0, max_pre), 0, top);
  Word per = random_word(rng, random_length(rng, 1, max_per), 0, top);
  return EPSeq(alphabet, std::move(pre), std::move(per));
}

EPSeq random_zero_free_seq(Rng& rng, double m, std::size_t max_pre, std::size_t max_per) {
  Word pre = random_word(rng, random_length(rng, 0, max_pre), ternary::kOne, ternary::kM);
  Word per = random_word(rng, random_length(rng, 1, max_per), ternary::kOne, ternary::kM);
  return EPSeq(Alphabet::ternary(m), std::move(pre), std::move(per));
}

double random_real(Rng& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

}  // namespace univoque
