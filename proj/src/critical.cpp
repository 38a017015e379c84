#include "univoque/critical.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "univoque/bisect.hpp"
#include "univoque/constants.hpp"
#include "univoque/error.hpp"
#include "univoque/evaluate.hpp"

namespace univoque {

namespace {

void require_above_one(double m) {
  if (!(m > 1.0)) throw DomainError("requires m > 1");
}

bool within(double m, double lo, double hi) { return m >= lo && m <= hi; }

}  // namespace

double curve_P(double m) {
  require_above_one(m);
  return 1.0 + std::sqrt(m / (m - 1.0));
}

double curve_R(double m) {
  require_above_one(m);
  return 1.0 + m / (m - 1.0);
}

std::string_view to_string(Branch branch) {
  switch (branch) {
    case Branch::Comp0Full: return "Comp0_full";
    case Branch::Comp10Left: return "Comp10_left";
    case Branch::Comp10Mid: return "Comp10_mid";
    case Branch::Comp10Right: return "Comp10_right";
  }
  return "?";
}

std::array<BranchSpec, 4> branches() {
  const Constants& c = constants();
  return {{
      {Branch::Comp0Full, 2.0, 1.0 + c.alpha.value, "m", "1", Target::Plain},
      {Branch::Comp10Left, c.m_d.value, c.m_1.value, "", "1m", Target::Complement},
      {Branch::Comp10Mid, c.m_2.value, c.m_3.value, "mm1", "m11m", Target::Plain},
      {Branch::Comp10Right, c.m_4.value, c.M_d.value, "m", "m1", Target::Plain},
  }};
}

const BranchSpec& spec_of(Branch branch) {
  static const std::array<BranchSpec, 4> table = branches();
  return table[static_cast<std::size_t>(branch)];
}

std::optional<Branch> branch_of(double m) {
  for (const BranchSpec& b : branches()) {
    if (within(m, b.lo, b.hi)) return b.label;
  }
  return std::nullopt;
}

EPSeq defining_sequence(Branch branch, double m) {
  const BranchSpec& b = spec_of(branch);
  return ternary_seq(m, b.preperiod, b.period);
}

double pi_residual(const EPSeq& seq, Target target, double q) {
  if (!seq.alphabet().is_ternary()) throw DomainError("residuals need the ternary alphabet");
  const double m = seq.alphabet().max();
  if (target == Target::Plain) return pi_eval(seq, q) - (m - 1.0);
  return pi_complement(seq, q) - 1.0;
}

double solve_pi_root(const EPSeq& seq, Target target, double q_lo, double q_hi) {
  if (!(q_lo > 1.0) || !(q_hi > q_lo)) throw DomainError("bracket must satisfy 1 < q_lo < q_hi");
  auto f = [&](double q) { return pi_residual(seq, target, q); };
  constexpr int kSamples = 32;
  double previous = f(q_lo);
  for (int i = 1; i < kSamples; ++i) {
    const double q = q_lo + (q_hi - q_lo) * i / (kSamples - 1);
    const double value = f(q);
    if (!(value < previous)) throw SolveError("residual is not decreasing on the bracket");
    previous = value;
  }
  const double root = bisect(f, q_lo, q_hi);
  if (!(std::abs(f(root)) < 1e-10)) {
    throw SolveError("residual at the root exceeds 1e-10");
  }
  return root;
}

double r_closed_form_comp0(double m) {
  if (!(m > 1.0)) throw DomainError("requires m > 1");
  return (2.0 * m - 1.0 + std::sqrt(4.0 * m - 3.0)) / (2.0 * m - 2.0);
}

double r_closed_form_comp10_left(double m) {
  const double k = m - 1.0;
  return (k + std::sqrt(k * k + 4.0)) / 2.0;
}

double p_prime(double m) {
  require_above_one(m);
  const double a = m - 1.0;
  return (m + std::sqrt(m * m + 4.0 * a * m)) / (2.0 * a);
}

double p_double_prime(double m) {
  require_above_one(m);
  return std::sqrt(m);
}

std::optional<double> p_of_m(double m) {
  if (!(m >= 2.0)) throw DomainError("requires m >= 2");
  const Constants& c = constants();
  if (m <= 1.0 + c.alpha.value) return m;
  if (within(m, c.m_d.value, c.M_d.value)) return std::max(p_prime(m), p_double_prime(m));
  return std::nullopt;
}

std::optional<CriticalBase> r_of_m(double m) {
  if (!(m >= 2.0)) throw DomainError("requires m >= 2");
  const auto branch = branch_of(m);
  if (!branch) return std::nullopt;
  switch (*branch) {
    case Branch::Comp0Full: return CriticalBase{r_closed_form_comp0(m), *branch};
    case Branch::Comp10Left: return CriticalBase{r_closed_form_comp10_left(m), *branch};
    case Branch::Comp10Mid:
    case Branch::Comp10Right: {
      const BranchSpec& b = spec_of(*branch);
      const double q = solve_pi_root(defining_sequence(*branch, m), b.target, 2.0, curve_R(m));
      return CriticalBase{q, *branch};
    }
  }
  return std::nullopt;
}

}  // namespace univoque
