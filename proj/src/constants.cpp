#include "univoque/constants.hpp"

#include <cmath>

#include "univoque/bisect.hpp"
#include "univoque/critical.hpp"
#include "univoque/evaluate.hpp"

namespace univoque {

std::string_view to_string(Provenance p) {
  switch (p) {
    case Provenance::ClosedForm: return "closed-form";
    case Provenance::PolynomialRoot: return "polynomial-root";
    case Provenance::CurveCrossing: return "curve-crossing";
    case Provenance::PublishedApprox: return "published-approximate";
    case Provenance::DisplayOnly: return "display-only";
  }
  return "?";
}

namespace {

double mid_branch_root(double m) {
  return solve_pi_root(ternary_seq(m, "mm1", "m11m"), Target::Plain, 2.0, curve_R(m));
}

double one_mm_one_root(double m) {
  return solve_pi_root(ternary_seq(m, "", "1mm1"), Target::Complement, 2.0, curve_R(m));
}

}  // namespace

Constants compute_constants() {
  Constants c{};
  c.alpha = {bisect([](double x) { return x * x * x - x - 1.0; }, 1.0, 2.0),
             Provenance::PolynomialRoot};
  c.phi = {(1.0 + std::sqrt(5.0)) / 2.0, Provenance::ClosedForm};

  const double q4 = (1.0 + std::sqrt(13.0)) / 2.0;
  c.q_4 = {q4, Provenance::ClosedForm};
  c.m_4 = {(3.0 + std::sqrt(13.0)) / 2.0, Provenance::ClosedForm};

  const double q1 = bisect(
      [](double q) { return q * q * (q - 1.0) * (q * q - q - 3.0) - 1.0; }, q4, 3.0);
  c.q_1 = {q1, Provenance::PolynomialRoot};
  c.m_1 = {1.0 + q1 - 1.0 / q1, Provenance::PolynomialRoot};

  c.m_d = {bisect(
               [](double m) {
                 return pi_eval(ternary_seq(m, "", "m1"), curve_P(m)) - (m - 1.0);
               },
               2.5, 3.2),
           Provenance::CurveCrossing};
  c.M_d = {bisect(
               [](double m) {
                 return pi_complement(ternary_seq(m, "", "m1"), curve_P(m)) - 1.0;
               },
               4.0, 5.0),
           Provenance::CurveCrossing};

  c.m_2 = {2.992, Provenance::PublishedApprox};
  c.m_3 = {bisect([](double m) { return mid_branch_root(m) - one_mm_one_root(m); }, 3.0, 3.2),
           Provenance::CurveCrossing};
  c.kl_q_prime = {1.78723, Provenance::DisplayOnly};
  return c;
}

const Constants& constants() {
  static const Constants cached = compute_constants();
  return cached;
}

std::string_view matching_m3_variant(double m3) {
  constexpr std::string_view kVariants[] = {"3.10204", "3.10214"};
  constexpr double kValues[] = {3.10204, 3.10214};
  for (int i = 0; i < 2; ++i) {
    if (std::abs(m3 - kValues[i]) <= 5e-6) return kVariants[i];
  }
  return {};
}

}  // namespace univoque
