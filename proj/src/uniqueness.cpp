#include "univoque/uniqueness.hpp"

#include <algorithm>
#include <cmath>

#include "univoque/error.hpp"
#include "univoque/evaluate.hpp"

namespace univoque {

namespace {

// Threshold comparisons absorb a relative rounding of the caller's q.
bool at_most(double q, double threshold) { return q <= threshold * (1.0 + 1e-12); }

}  // namespace

double zero_free_iff_threshold(double m) { return 1.0 + m / (m - 1.0); }

Verdict check_univoque_general(const EPSeq& c, double q) {
  if (!(q > 1.0)) throw DomainError("base q must satisfy q > 1");
  const Alphabet& a = c.alphabet();
  const Symbol top = static_cast<Symbol>(a.size() - 1);
  std::vector<ConditionCheck> checks;
  for (std::size_t n = 1; n <= c.distinct_tail_count(); ++n) {
    const Symbol s = c.at(n - 1);
    const EPSeq tail = shift(c, n);
    const double margin = std::max(kCompareMargin, pi_eval_bounded(tail, q).error);
    if (s < top) {
      checks.push_back(make_check(n, ConditionKind::GapAbove, pi_excess(tail, q),
                                  a.digit(s + 1) - a.digit(s), margin));
    }
    if (s > 0) {
      checks.push_back(make_check(n, ConditionKind::GapBelow, pi_deficit(tail, q),
                                  a.digit(s) - a.digit(s - 1), margin));
    }
  }
  return decide(std::move(checks), at_most(q, a.iff_threshold()));
}

Verdict check_v_membership(const EPSeq& c, double q) {
  if (!c.alphabet().is_ternary()) {
    throw DomainError("zero-free membership needs the alphabet {0,1,m}");
  }
  if (c.uses(ternary::kZero)) {
    throw DomainError("zero-free membership needs a sequence over {1,m}");
  }
  if (!(q > 2.0)) throw DomainError("zero-free membership needs q > 2");
  const double m = c.alphabet().max();
  std::vector<ConditionCheck> checks;
  for (std::size_t n = 1; n <= c.distinct_tail_count(); ++n) {
    if (c.at(n - 1) != ternary::kOne) continue;
    const EPSeq tail = shift(c, n);
    const double margin = std::max(kCompareMargin, pi_eval_bounded(tail, q).error);
    checks.push_back(make_check(n, ConditionKind::TailBelow, pi_eval(tail, q), m - 1.0, margin));
    checks.push_back(
        make_check(n, ConditionKind::ComplementBelow, pi_complement(tail, q), 1.0, margin));
  }
  return decide(std::move(checks), at_most(q, zero_free_iff_threshold(m)));
}

}  // namespace univoque
