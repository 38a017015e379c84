#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "univoque/appendix.hpp"

namespace univoque {

struct InvariantResult {
  std::string name;
  std::size_t trials = 0;
  std::size_t failures = 0;
  std::string first_failure;
};

/// Randomized checks of the library invariants: closed-form versus
/// truncated sums, shift identity, lexicographic monotonicity, notation
/// round trips, critical-base brackets and residuals, safety automata.
std::vector<InvariantResult> run_invariant_suite(std::uint64_t seed = 1);

struct SelftestReport {
  std::vector<InvariantResult> invariants;
  SuiteReport appendix;

  bool passed() const;
};

SelftestReport run_selftest(const SuiteOptions& options = {}, std::uint64_t seed = 1);

}  // namespace univoque
