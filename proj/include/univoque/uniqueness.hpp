#pragma once

#include "univoque/sequence.hpp"
#include "univoque/verdict.hpp"

namespace univoque {

/// Decides whether `c` is the unique expansion of its value in base q over
/// c's own alphabet A = {a_1 < ... < a_J}.
///
/// For every position n with c_n = a_j the gap conditions
///
///   sum_{i>=1} (c_{n+i} - a_1) q^{-i} < a_{j+1} - a_j   (when a_j < a_J)
///   sum_{i>=1} (a_J - c_{n+i}) q^{-i} < a_j - a_{j-1}   (when a_j > a_1)
///
/// are evaluated exactly on the |u| + |v| distinct tails. They are sufficient
/// for uniqueness, and also necessary when q <= A.iff_threshold(); above that
/// threshold a failure yields Inconclusive.
///
/// Throws DomainError for q <= 1.
Verdict check_univoque_general(const EPSeq& c, double q);

/// Membership of a sequence over {1, m} in the zero-free univoque set:
/// at every position n with c_n = 1,
///
///   pi_q(c_{n+i}) < m - 1   and   pi_q(m - c_{n+i}) < 1.
///
/// Necessary as well as sufficient for 2 < q <= R_m = 1 + m/(m-1); above R_m
/// failures are Inconclusive. Throws DomainError if q <= 2, the alphabet is
/// not {0,1,m}, or c contains the digit 0.
Verdict check_v_membership(const EPSeq& c, double q);

/// R_m = 1 + m/(m-1).
double zero_free_iff_threshold(double m);

}  // namespace univoque
