#include "univoque/selftest.hpp"

#include <cmath>
#include <functional>
#include <sstream>

#include "univoque/constants.hpp"
#include "univoque/critical.hpp"
#include "univoque/evaluate.hpp"
#include "univoque/forbidden.hpp"
#include "univoque/notation.hpp"
#include "univoque/random.hpp"
#include "univoque/uniqueness.hpp"

namespace univoque {

namespace {

// Runs `trial` the given number of times; a trial returns an empty string on
// success and a description otherwise.
InvariantResult run(std::string name, std::size_t trials, const std::function<std::string()>& trial) {
  InvariantResult r{std::move(name), trials, 0, {}};
  for (std::size_t i = 0; i < trials; ++i) {
    std::string failure;
    try {
      failure = trial();
    } catch (const std::exception& e) {
      failure = std::string("exception: ") + e.what();
    }
    if (failure.empty()) continue;
    if (r.failures++ == 0) r.first_failure = std::move(failure);
  }
  return r;
}

std::string describe(const EPSeq& s, double q) {
  std::ostringstream os;
  os.precision(17);
  os << format_seq(s) << " at q=" << q;
  return os.str();
}

Alphabet random_alphabet(Rng& rng) {
  const double m = random_real(rng, 2.0, 5.0);
  if (rng() % 2 == 0) return Alphabet::ternary(m);
  return Alphabet::from_digits({0.0, 1.0, 2.0, 3.0});
}

}  // namespace

std::vector<InvariantResult> run_invariant_suite(std::uint64_t seed) {
  Rng rng(seed);
  std::vector<InvariantResult> out;

  out.push_back(run("closed-form-vs-truncated", 1000, [&] {
    const EPSeq s = random_seq(rng, random_alphabet(rng));
    const double q = random_real(rng, 1.1, 5.0);
    const double bound = s.alphabet().max() * std::pow(q, -64.0) / (q - 1.0) + 1e-12;
    const double gap = std::abs(pi_eval(s, q) - pi_eval_truncated(s, q, 64));
    return gap <= bound ? std::string() : describe(s, q);
  }));

  out.push_back(run("shift-identity", 1000, [&] {
    const EPSeq s = random_seq(rng, random_alphabet(rng));
    const double q = random_real(rng, 1.1, 5.0);
    const double lhs = pi_eval(s, q);
    const double rhs = s.digit_at(0) / q + pi_eval(shift(s, 1), q) / q;
    return std::abs(lhs - rhs) <= 1e-12 * std::max(1.0, std::abs(lhs)) ? std::string()
                                                                        : describe(s, q);
  }));

  out.push_back(run("lexicographic-monotonicity", 1000, [&] {
    const double m = random_real(rng, 2.0, 5.0);
    const double q = random_real(rng, 2.001, 5.0);
    EPSeq a = random_zero_free_seq(rng, m);
    EPSeq b = random_zero_free_seq(rng, m);
    const Order o = lex_cmp(a, b);
    if (o == Order::Equal) return std::string();
    if (o == Order::Greater) std::swap(a, b);
    return pi_eval(a, q) < pi_eval(b, q) ? std::string() : describe(a, q) + " vs " + describe(b, q);
  }));

  out.push_back(run("notation-round-trip", 500, [&] {
    const EPSeq s = random_seq(rng, Alphabet::ternary(3.0));
    const EPSeq back = parse_infinite(format_seq(s), s.alphabet());
    return back == s ? std::string() : format_seq(s);
  }));

  out.push_back(run("membership-consistency", 200, [&] {
    const double m = random_real(rng, 2.0, 5.0);
    const double q = random_real(rng, 2.001, zero_free_iff_threshold(m));
    const EPSeq c = random_zero_free_seq(rng, m);
    if (check_v_membership(c, q).kind != VerdictKind::ProvenUnique) return std::string();
    return check_univoque_general(c, q).kind != VerdictKind::ProvenNotUnique ? std::string()
                                                                             : describe(c, q);
  }));

  out.push_back(run("forbidden-block-soundness", 100, [&] {
    const double m = random_real(rng, 2.0, 5.0);
    const double q = random_real(rng, 2.001, zero_free_iff_threshold(m));
    const Word w = random_word(rng, 1 + rng() % 5, ternary::kOne, ternary::kM);
    if (!is_forbidden_block(w, m, q)) return std::string();
    const Word pre = random_word(rng, rng() % 4, ternary::kOne, ternary::kM);
    const Word per = random_word(rng, 1 + rng() % 4, ternary::kOne, ternary::kM);
    const EPSeq c(Alphabet::ternary(m), pre + Word{ternary::kOne} + w, per);
    return check_v_membership(c, q).kind != VerdictKind::ProvenUnique ? std::string()
                                                                       : describe(c, q);
  }));

  for (const BranchSpec& b : branches()) {
    std::size_t i = 0;
    out.push_back(run(std::string("critical-base-") + std::string(to_string(b.label)), 100, [&] {
      const double m = b.lo + (b.hi - b.lo) * static_cast<double>(i++) / 99.0;
      const auto r = r_of_m(m);
      if (!r) return "no r at m=" + std::to_string(m);
      const double P = curve_P(m);
      const double R = curve_R(m);
      if (!(r->q >= P - 1e-9 && r->q < R)) return "outside [P, R) at m=" + std::to_string(m);
      const double res = pi_residual(defining_sequence(b.label, m), b.target, r->q);
      if (!(std::abs(res) <= 1e-9)) return "residual at m=" + std::to_string(m);
      if (const auto p = p_of_m(m); p && !(*p >= 2.0 && *p <= P + 1e-12)) {
        return "p out of order at m=" + std::to_string(m);
      }
      return std::string();
    }));
  }
  return out;
}

bool SelftestReport::passed() const {
  for (const InvariantResult& r : invariants) {
    if (r.failures != 0) return false;
  }
  return appendix.passed();
}

SelftestReport run_selftest(const SuiteOptions& options, std::uint64_t seed) {
  return {run_invariant_suite(seed), appendix_sign_suite(200, options)};
}

}  // namespace univoque
