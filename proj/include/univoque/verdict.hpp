#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

namespace univoque {

enum class VerdictKind { ProvenUnique, ProvenNotUnique, Inconclusive };

/// Which strict inequality a check evaluates at position n.
enum class ConditionKind {
  GapAbove,         // sum (c_{n+i} - a_1) q^{-i} < a_{j+1} - a_j   when c_n = a_j < a_J
  GapBelow,         // sum (a_J - c_{n+i}) q^{-i} < a_j - a_{j-1}   when c_n = a_j > a_1
  TailBelow,        // pi_q(c_{n+i}) < m - 1                       when c_n = 1, over {1,m}
  ComplementBelow,  // pi_q(m - c_{n+i}) < 1                       when c_n = 1, over {1,m}
};

/// One evaluated inequality lhs < rhs at a 1-based position.
struct ConditionCheck {
  std::size_t position = 0;
  ConditionKind condition = ConditionKind::GapAbove;
  double lhs = 0.0;
  double rhs = 0.0;
  double slack = 0.0;     // rhs - lhs
  double margin = 0.0;    // comparison margin used
  bool holds = false;     // slack > margin
  bool boundary = false;  // |slack| <= margin: too close to call
};

/// ProvenNotUnique always carries a witness (the first failing check).
/// A check within the margin of equality counts as failing, with
/// `witness->boundary` set; the strict inequality is not certified there.
struct Verdict {
  VerdictKind kind = VerdictKind::Inconclusive;
  std::optional<ConditionCheck> witness;
  std::vector<ConditionCheck> checks;
};

std::string_view to_string(VerdictKind kind);
std::string_view to_string(ConditionKind kind);

/// Builds a check from lhs/rhs and a margin.
ConditionCheck make_check(std::size_t position, ConditionKind condition, double lhs,
                          double rhs, double margin);

/// All checks hold -> ProvenUnique; otherwise ProvenNotUnique when the
/// conditions are also necessary (`iff_regime`), else Inconclusive.
Verdict decide(std::vector<ConditionCheck> checks, bool iff_regime);

}  // namespace univoque
