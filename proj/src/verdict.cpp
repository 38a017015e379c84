#include "univoque/verdict.hpp"

#include <cmath>

namespace univoque {

std::string_view to_string(VerdictKind kind) {
  switch (kind) {
    case VerdictKind::ProvenUnique: return "ProvenUnique";
    case VerdictKind::ProvenNotUnique: return "ProvenNotUnique";
    case VerdictKind::Inconclusive: return "Inconclusive";
  }
  return "?";
}

std::string_view to_string(ConditionKind kind) {
  switch (kind) {
    case ConditionKind::GapAbove: return "gap_above";
    case ConditionKind::GapBelow: return "gap_below";
    case ConditionKind::TailBelow: return "tail";
    case ConditionKind::ComplementBelow: return "complement";
  }
  return "?";
}

ConditionCheck make_check(std::size_t position, ConditionKind condition, double lhs,
                          double rhs, double margin) {
  ConditionCheck c;
  c.position = position;
  c.condition = condition;
  c.lhs = lhs;
  c.rhs = rhs;
  c.slack = rhs - lhs;
  c.margin = margin;
  c.holds = c.slack > margin;
  c.boundary = std::abs(c.slack) <= margin;
  return c;
}

Verdict decide(std::vector<ConditionCheck> checks, bool iff_regime) {
  Verdict v;
  for (const ConditionCheck& c : checks) {
    if (!c.holds) {
      v.witness = c;
      break;
    }
  }
  if (!v.witness) {
    v.kind = VerdictKind::ProvenUnique;
  } else {
    v.kind = iff_regime ? VerdictKind::ProvenNotUnique : VerdictKind::Inconclusive;
  }
  v.checks = std::move(checks);
  return v;
}

}  // namespace univoque
