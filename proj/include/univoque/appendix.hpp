#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace univoque {

/// One sign identity of the form "lhs ~ rhs" (same sign), or a strict
/// inequality "lhs < 0" / "lhs >= 0", checked over a range of m.
struct IdentityInfo {
  std::string_view id;
  std::string_view statement;
  double m_lo;
  double m_hi;
  /// true when the identity is checked on a q-grid at every m.
  bool over_q;
};

/// Identities in a fixed order; ranges are closed.
const std::vector<IdentityInfo>& sign_identities();

struct IdentityPoint {
  std::string id;
  double m;
  double q;  // NaN for identities that do not range over q
  double lhs;
  double rhs;
  bool boundary;
  bool pass;
};

struct CrossoverCheck {
  std::string id;
  double located;
  double expected;
  bool pass;
};

struct IdentitySummary {
  std::string id;
  std::size_t points = 0;
  std::size_t failures = 0;
};

struct SuiteOptions {
  /// Added to P_m everywhere; a nonzero value must make the suite fail.
  double p_offset = 0.0;
  /// Distance in m from a crossover within which a sign mismatch is excused,
  /// and the accepted error of a located crossover.
  double boundary_tolerance = 1e-6;
};

struct SuiteReport {
  std::vector<IdentityPoint> points;
  std::vector<CrossoverCheck> crossovers;

  bool passed() const;
  std::vector<IdentitySummary> summary() const;
};

/// Evaluates every identity whose range contains m, for each m of the grid.
/// Crossovers are located by bisection on the pi-side of each identity and
/// compared with the constants 1+alpha, m_d, M_d and m_4.
SuiteReport appendix_sign_suite(std::span<const double> m_grid, const SuiteOptions& options = {});

/// Uniform grid of `points_per_identity` values over each identity range.
SuiteReport appendix_sign_suite(std::size_t points_per_identity = 200,
                                const SuiteOptions& options = {});

}  // namespace univoque
