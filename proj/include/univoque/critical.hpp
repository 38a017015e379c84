#pragma once

#include <array>
#include <optional>
#include <string_view>

#include "univoque/sequence.hpp"

namespace univoque {

/// P_m = 1 + sqrt(m/(m-1)), the upper bound of the generalized golden
/// ratio; satisfies (m-1) P (P-2) = 1. Requires m > 1.
double curve_P(double m);

/// R_m = 1 + m/(m-1); satisfies (m-1)(R-2) = 1. Requires m > 1.
double curve_R(double m);

/// Intervals of m on which the zero-free critical base r_m is known.
enum class Branch {
  Comp0Full,    // [2, 1+alpha]:  pi_q(m 1^inf) = m - 1
  Comp10Left,   // [m_d, m_1]:    pi_q(m^inf - (1m)^inf) = 1
  Comp10Mid,    // [m_2, m_3]:    pi_q(mm1 (m11m)^inf) = m - 1
  Comp10Right,  // [m_4, M_d]:    pi_q(m (m1)^inf) = m - 1
};

/// How a defining equation compares its sequence with the target.
enum class Target {
  Plain,       // pi_q(seq) = m - 1
  Complement,  // pi_q(m - seq) = 1
};

struct BranchSpec {
  Branch label;
  double lo;
  double hi;
  std::string_view preperiod;
  std::string_view period;
  Target target;
};

std::string_view to_string(Branch branch);

/// The four branches in increasing order of m, endpoints from constants().
std::array<BranchSpec, 4> branches();

/// Branch containing m, if any (closed intervals).
std::optional<Branch> branch_of(double m);

const BranchSpec& spec_of(Branch branch);

/// The defining sequence of a branch over {0,1,m}.
EPSeq defining_sequence(Branch branch, double m);

/// Signed residual of the defining equation, decreasing in q:
/// Plain: pi_q(seq) - (m-1); Complement: pi_q(m - seq) - 1.
double pi_residual(const EPSeq& seq, Target target, double q);

/// Root in q of pi_residual by bisection. The residual must change sign
/// over [q_lo, q_hi] and decrease strictly on a 32-point sample. The
/// result satisfies |residual| < 1e-10. Throws SolveError otherwise.
double solve_pi_root(const EPSeq& seq, Target target, double q_lo, double q_hi);

/// Closed forms of r_m on the two left branches.
double r_closed_form_comp0(double m);       // (2m-1+sqrt(4m-3)) / (2m-2)
double r_closed_form_comp10_left(double m);  // (m-1+sqrt((m-1)^2+4)) / 2

/// Root q > 2 of (m-1) q^2 - m q - m = 0, where pi_q((m1)^inf) = m - 1.
double p_prime(double m);
/// sqrt(m), where pi_q(m^inf - (m1)^inf) = 1.
double p_double_prime(double m);

/// Generalized golden ratio p_m on the covered components: m on
/// [2, 1+alpha]; max(p', p'') on [m_d, M_d]; nullopt elsewhere.
std::optional<double> p_of_m(double m);

struct CriticalBase {
  double q;
  Branch branch;
};

/// Critical base r_m on the four branches; nullopt in the gaps.
std::optional<CriticalBase> r_of_m(double m);

}  // namespace univoque
