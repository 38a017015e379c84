#pragma once

#include <string_view>

namespace univoque {

/// How a constant is obtained.
enum class Provenance {
  ClosedForm,        // exact radical expression
  PolynomialRoot,    // bisection on a defining polynomial
  CurveCrossing,     // nested bisection of two critical-base curves
  PublishedApprox,   // literal taken from a published decimal
  DisplayOnly,       // reference value, not used in computation
};

std::string_view to_string(Provenance p);

struct Constant {
  double value;
  Provenance provenance;
};

struct Constants {
  Constant alpha;        // real root of x^3 = x + 1
  Constant phi;          // (1 + sqrt 5) / 2
  Constant m_d;          // left end of the first (10)^inf component
  Constant M_d;          // right end of the first (10)^inf component
  Constant m_1;          // P_m = r_comp10_left(m)
  Constant q_1;          // common base value at m_1
  Constant m_2;          // left end of the middle branch
  Constant m_3;          // mid branch meets the (1mm1)^inf curve
  Constant m_4;          // (3 + sqrt 13) / 2
  Constant q_4;          // (1 + sqrt 13) / 2
  Constant kl_q_prime;   // Komornik-Loreti-type constant for q'
};

/// Computed once on first use.
const Constants& constants();

/// Recomputes every constant from its definition.
Constants compute_constants();

/// Two decimals have been printed for m_3; returns the one m_3 rounds to,
/// or an empty view if neither.
std::string_view matching_m3_variant(double m3);

}  // namespace univoque
