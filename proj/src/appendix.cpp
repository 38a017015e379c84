#include "univoque/appendix.hpp"

#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <optional>

#include "univoque/bisect.hpp"
#include "univoque/constants.hpp"
#include "univoque/critical.hpp"
#include "univoque/error.hpp"
#include "univoque/evaluate.hpp"

namespace univoque {

namespace {

constexpr double kZeroTolerance = 1e-9;
constexpr double kEqualityTolerance = 1e-12;

struct Context {
  double m;
  double q;
  double P;
  double R;
};

enum class Kind {
  SameSign,     // sign(lhs) == sign(rhs)
  Equal,        // lhs == rhs
  Negative,     // lhs < 0
  NonNegative,  // lhs >= 0, zero only at the crossover
};

enum class Crossover { None, OnePlusAlpha, MD, BigMD, M4 };

struct Entry {
  IdentityInfo info;
  Kind kind;
  Crossover crossover;
  std::function<std::pair<double, double>(const Context&)> sides;
};

double crossover_value(Crossover c) {
  const Constants& k = constants();
  switch (c) {
    case Crossover::None: return std::numeric_limits<double>::quiet_NaN();
    case Crossover::OnePlusAlpha: return 1.0 + k.alpha.value;
    case Crossover::MD: return k.m_d.value;
    case Crossover::BigMD: return k.M_d.value;
    case Crossover::M4: return k.m_4.value;
  }
  return std::numeric_limits<double>::quiet_NaN();
}

EPSeq seq(double m, std::string_view pre, std::string_view per) {
  return ternary_seq(m, pre, per);
}

double pi_plain(double m, std::string_view pre, std::string_view per, double q) {
  return pi_eval(seq(m, pre, per), q) - (m - 1.0);
}

double pi_comp(double m, std::string_view pre, std::string_view per, double q) {
  return pi_complement(seq(m, pre, per), q) - 1.0;
}

double cubic_P(double P) { return P * P * P - 2.0 * P * P - P + 1.0; }
double quartic_P(double P) {
  return -P * P * P * P + 2.0 * P * P * P + P * P - 2.0 * P + 1.0;
}

const std::vector<Entry>& entries() {
  static const std::vector<Entry> table = [] {
    const Constants& k = constants();
    const double alpha1 = 1.0 + k.alpha.value;
    std::vector<Entry> t;
    t.push_back({{"bracket-P", "(m-1) P (P-2) = 1", 2.0, 10.0, false},
                 Kind::Equal, Crossover::None,
                 [](const Context& c) {
                   return std::pair{(c.m - 1.0) * c.P * (c.P - 2.0), 1.0};
                 }});
    t.push_back({{"bracket-R", "(m-1)(R-2) = 1", 2.0, 10.0, false},
                 Kind::Equal, Crossover::None,
                 [](const Context& c) { return std::pair{(c.m - 1.0) * (c.R - 2.0), 1.0}; }});
    t.push_back({{"golden-equals-m", "pi_m(m^inf - 1^inf) = 1", 2.0, alpha1, false},
                 Kind::Equal, Crossover::None,
                 [](const Context& c) { return std::pair{pi_comp(c.m, "", "1", c.m), 0.0}; }});
    t.push_back({{"ones-complement", "pi_q(m^inf - 1^inf) - 1 ~ m - q", 2.0, 10.0, true},
                 Kind::SameSign, Crossover::None,
                 [](const Context& c) {
                   return std::pair{pi_comp(c.m, "", "1", c.q), c.m - c.q};
                 }});
    t.push_back({{"ones-complement-at-P", "pi_P(m^inf - 1^inf) - 1 ~ m - P", 2.0, 10.0, false},
                 Kind::SameSign, Crossover::OnePlusAlpha,
                 [](const Context& c) {
                   return std::pair{pi_comp(c.m, "", "1", c.P), c.m - c.P};
                 }});
    t.push_back({{"m-ones", "pi_q(m1^inf) - (m-1) ~ r(m) - q", 2.0, 10.0, true},
                 Kind::SameSign, Crossover::None,
                 [](const Context& c) {
                   return std::pair{pi_plain(c.m, "m", "1", c.q),
                                    r_closed_form_comp0(c.m) - c.q};
                 }});
    t.push_back({{"m-ones-below-at-R", "pi_R(m1^inf) < m - 1", 2.0, 10.0, false},
                 Kind::Negative, Crossover::None,
                 [](const Context& c) { return std::pair{pi_plain(c.m, "m", "1", c.R), 0.0}; }});
    t.push_back({{"m-ones-at-P", "pi_P(m1^inf) - (m-1) ~ 1 + alpha - m", 2.0, 10.0, false},
                 Kind::SameSign, Crossover::OnePlusAlpha,
                 [alpha1](const Context& c) {
                   return std::pair{pi_plain(c.m, "m", "1", c.P), alpha1 - c.m};
                 }});
    t.push_back({{"m-one-periodic",
                  "pi_q((m1)^inf) - (m-1) ~ (q+1) - (m-1)(q^2-q-1)", 2.0, 10.0, true},
                 Kind::SameSign, Crossover::None,
                 [](const Context& c) {
                   return std::pair{pi_plain(c.m, "", "m1", c.q),
                                    (c.q + 1.0) - (c.m - 1.0) * (c.q * c.q - c.q - 1.0)};
                 }});
    t.push_back({{"m-one-periodic-at-P", "pi_P((m1)^inf) - (m-1) ~ P^3 - 2P^2 - P + 1", 2.0,
                  10.0, false},
                 Kind::SameSign, Crossover::MD,
                 [](const Context& c) {
                   return std::pair{pi_plain(c.m, "", "m1", c.P), cubic_P(c.P)};
                 }});
    t.push_back({{"cubic-vs-m_d", "P^3 - 2P^2 - P + 1 ~ m_d - m", 2.0, 10.0, false},
                 Kind::SameSign, Crossover::MD,
                 [md = k.m_d.value](const Context& c) {
                   return std::pair{cubic_P(c.P), md - c.m};
                 }});
    t.push_back({{"m-minus-m-one-at-P",
                  "pi_P(m^inf - (m1)^inf) - 1 ~ -P^4 + 2P^3 + P^2 - 2P + 1", 2.0, 10.0, false},
                 Kind::SameSign, Crossover::BigMD,
                 [](const Context& c) {
                   return std::pair{pi_comp(c.m, "", "m1", c.P), quartic_P(c.P)};
                 }});
    t.push_back({{"quartic-vs-M_d", "-P^4 + 2P^3 + P^2 - 2P + 1 ~ m - M_d", 2.0, 10.0, false},
                 Kind::SameSign, Crossover::BigMD,
                 [big = k.M_d.value](const Context& c) {
                   return std::pair{quartic_P(c.P), c.m - big};
                 }});
    t.push_back({{"one-m", "pi_q(m^inf - (1m)^inf) - 1 ~ r(m) - q", 2.0, 10.0, true},
                 Kind::SameSign, Crossover::None,
                 [](const Context& c) {
                   return std::pair{pi_comp(c.m, "", "1m", c.q),
                                    r_closed_form_comp10_left(c.m) - c.q};
                 }});
    t.push_back({{"one-m-below-at-R", "pi_R(m^inf - (1m)^inf) < 1", k.m_d.value, k.m_1.value,
                  false},
                 Kind::Negative, Crossover::None,
                 [](const Context& c) { return std::pair{pi_comp(c.m, "", "1m", c.R), 0.0}; }});
    t.push_back({{"one-m-at-P", "pi_P(m^inf - (1m)^inf) >= 1, equality only at m_d",
                  k.m_d.value, 10.0, false},
                 Kind::NonNegative, Crossover::MD,
                 [](const Context& c) { return std::pair{pi_comp(c.m, "", "1m", c.P), 0.0}; }});
    t.push_back({{"mm-ones", "pi_q(mm1^inf) - (m-1) ~ 1 - (m-1)(q - 2 + q^-2)", 2.0, 10.0, true},
                 Kind::SameSign, Crossover::None,
                 [](const Context& c) {
                   return std::pair{pi_plain(c.m, "mm", "1", c.q),
                                    1.0 - (c.m - 1.0) * (c.q - 2.0 + 1.0 / (c.q * c.q))};
                 }});
    t.push_back({{"m-m-one-at-m-minus-1", "pi_{m-1}(m(m1)^inf) - (m-1) ~ m_4 - m", 2.05, 10.0,
                  false},
                 Kind::SameSign, Crossover::M4,
                 [m4 = k.m_4.value](const Context& c) {
                   return std::pair{pi_plain(c.m, "m", "m1", c.m - 1.0), m4 - c.m};
                 }});
    t.push_back({{"m-m-one-below-at-R", "pi_R(m(m1)^inf) < m - 1", 2.0, 10.0, false},
                 Kind::Negative, Crossover::None,
                 [](const Context& c) { return std::pair{pi_plain(c.m, "m", "m1", c.R), 0.0}; }});
    t.push_back({{"m-m-one-at-P", "pi_P(m(m1)^inf) >= m - 1, equality only at M_d", 2.0,
                  k.M_d.value, false},
                 Kind::NonNegative, Crossover::BigMD,
                 [](const Context& c) { return std::pair{pi_plain(c.m, "m", "m1", c.P), 0.0}; }});
    return t;
  }();
  return table;
}

int sign(double x) { return (x > 0.0) - (x < 0.0); }

IdentityPoint evaluate(const Entry& e, double m, double q, double P, double R,
                       const SuiteOptions& options) {
  const auto [lhs, rhs] = e.sides(Context{m, q, P, R});
  const double cross = crossover_value(e.crossover);
  const bool near_cross =
      e.crossover != Crossover::None && std::abs(m - cross) <= options.boundary_tolerance;
  IdentityPoint p{std::string(e.info.id), m, e.info.over_q ? q : std::nan(""),
                  lhs, rhs, false, false};
  switch (e.kind) {
    case Kind::Equal:
      p.pass = std::abs(lhs - rhs) <= kEqualityTolerance;
      break;
    case Kind::SameSign:
      p.boundary = near_cross || std::abs(lhs) <= kZeroTolerance || std::abs(rhs) <= kZeroTolerance;
      p.pass = sign(lhs) == sign(rhs) || p.boundary;
      break;
    case Kind::Negative:
      p.pass = lhs < 0.0;
      break;
    case Kind::NonNegative:
      p.boundary = near_cross;
      p.pass = lhs > 0.0 || (near_cross && std::abs(lhs) <= kZeroTolerance);
      break;
  }
  return p;
}

std::vector<double> q_grid(double P, double R) {
  return {1.5, 2.05, 2.2, 2.35, 2.5, 2.75, 3.0, 3.5, P, R};
}

void evaluate_at(const Entry& e, double m, const SuiteOptions& options,
                 std::vector<IdentityPoint>& out) {
  const double P = curve_P(m) + options.p_offset;
  const double R = curve_R(m);
  if (!e.info.over_q) {
    out.push_back(evaluate(e, m, std::nan(""), P, R, options));
    return;
  }
  for (double q : q_grid(P, R)) out.push_back(evaluate(e, m, q, P, R, options));
}

struct CrossoverSpec {
  std::string_view id;
  double lo;
  double hi;
  Crossover expected;
};

std::vector<CrossoverCheck> locate_crossovers(const SuiteOptions& options) {
  static constexpr CrossoverSpec kSpecs[] = {
      {"ones-complement-at-P", 2.1, 2.6, Crossover::OnePlusAlpha},
      {"m-ones-at-P", 2.1, 2.6, Crossover::OnePlusAlpha},
      {"m-one-periodic-at-P", 2.5, 3.2, Crossover::MD},
      {"one-m-at-P", 2.5, 3.2, Crossover::MD},
      {"m-minus-m-one-at-P", 4.0, 5.0, Crossover::BigMD},
      {"m-m-one-at-P", 4.0, 5.0, Crossover::BigMD},
      {"m-m-one-at-m-minus-1", 3.0, 4.0, Crossover::M4},
  };
  std::vector<CrossoverCheck> checks;
  for (const CrossoverSpec& spec : kSpecs) {
    const Entry* entry = nullptr;
    for (const Entry& e : entries()) {
      if (e.info.id == spec.id) entry = &e;
    }
    auto lhs = [&](double m) {
      const double P = curve_P(m) + options.p_offset;
      return entry->sides(Context{m, std::nan(""), P, curve_R(m)}).first;
    };
    const double expected = crossover_value(spec.expected);
    CrossoverCheck check{std::string(spec.id), std::nan(""), expected, false};
    try {
      check.located = bisect(lhs, spec.lo, spec.hi);
      check.pass = std::abs(check.located - expected) <= options.boundary_tolerance;
    } catch (const SolveError&) {
      check.pass = false;
    }
    checks.push_back(check);
  }
  return checks;
}

}  // namespace

const std::vector<IdentityInfo>& sign_identities() {
  static const std::vector<IdentityInfo> infos = [] {
    std::vector<IdentityInfo> v;
    for (const Entry& e : entries()) v.push_back(e.info);
    return v;
  }();
  return infos;
}

bool SuiteReport::passed() const {
  for (const IdentityPoint& p : points) {
    if (!p.pass) return false;
  }
  for (const CrossoverCheck& c : crossovers) {
    if (!c.pass) return false;
  }
  return true;
}

std::vector<IdentitySummary> SuiteReport::summary() const {
  std::vector<IdentitySummary> out;
  std::map<std::string, std::size_t> index;
  for (const IdentityInfo& info : sign_identities()) {
    index.emplace(std::string(info.id), out.size());
    out.push_back({std::string(info.id), 0, 0});
  }
  for (const IdentityPoint& p : points) {
    IdentitySummary& s = out[index.at(p.id)];
    ++s.points;
    if (!p.pass) ++s.failures;
  }
  return out;
}

SuiteReport appendix_sign_suite(std::span<const double> m_grid, const SuiteOptions& options) {
  SuiteReport report;
  for (double m : m_grid) {
    if (!(m >= 2.0 && m <= 10.0)) throw DomainError("grid values must lie in [2, 10]");
    for (const Entry& e : entries()) {
      if (m < e.info.m_lo || m > e.info.m_hi) continue;
      evaluate_at(e, m, options, report.points);
    }
  }
  report.crossovers = locate_crossovers(options);
  return report;
}

SuiteReport appendix_sign_suite(std::size_t points_per_identity, const SuiteOptions& options) {
  if (points_per_identity < 2) throw DomainError("need at least two points per identity");
  SuiteReport report;
  for (const Entry& e : entries()) {
    const double step = (e.info.m_hi - e.info.m_lo) / static_cast<double>(points_per_identity - 1);
    for (std::size_t i = 0; i < points_per_identity; ++i) {
      const double m = i + 1 == points_per_identity ? e.info.m_hi : e.info.m_lo + step * i;
      evaluate_at(e, m, options, report.points);
    }
  }
  report.crossovers = locate_crossovers(options);
  return report;
}

}  // namespace univoque
