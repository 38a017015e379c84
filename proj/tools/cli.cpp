#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <exception>
#include <optional>
#include <ostream>
#include <thread>

#include "univoque/automaton.hpp"
#include "univoque/constants.hpp"
#include "univoque/critical.hpp"
#include "univoque/dot.hpp"
#include "univoque/error.hpp"
#include "univoque/evaluate.hpp"
#include "univoque/family.hpp"
#include "univoque/forbidden.hpp"
#include "univoque/growth.hpp"
#include "univoque/notation.hpp"
#include "univoque/selftest.hpp"
#include "univoque/uniqueness.hpp"

namespace univoque::cli {

namespace {

using Json = nlohmann::ordered_json;

std::string fmt(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

Json number_or_null(double x) { return std::isfinite(x) ? Json(x) : Json(nullptr); }

Alphabet parse_alphabet(const std::string& text) {
  std::vector<double> digits;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = std::min(text.find(',', start), text.size());
    const std::string item = text.substr(start, comma - start);
    std::size_t used = 0;
    double value = 0.0;
    try {
      value = std::stod(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (item.empty() || used != item.size()) throw DomainError("bad alphabet entry '" + item + "'");
    digits.push_back(value);
    start = comma + 1;
  }
  return Alphabet::from_digits(std::move(digits));
}

// Alphabet from --alphabet, else {0,1,m} from --m.
Alphabet choose_alphabet(const std::optional<std::string>& alphabet, const std::optional<double>& m) {
  if (alphabet && m) throw DomainError("give either --alphabet or --m, not both");
  if (alphabet) return parse_alphabet(*alphabet);
  if (m) return Alphabet::ternary(*m);
  throw DomainError("one of --alphabet or --m is required");
}

std::vector<Word> parse_blocks(const std::vector<std::string>& texts) {
  const Alphabet alphabet = Alphabet::ternary(3.0);
  std::vector<Word> words;
  for (const std::string& t : texts) {
    Word w = parse_word(t, alphabet);
    for (Symbol s : w) letter_of(s);
    words.push_back(std::move(w));
  }
  return words;
}

Json check_json(const ConditionCheck& c) {
  return Json{{"position", c.position},
              {"condition", to_string(c.condition)},
              {"lhs", c.lhs},
              {"rhs", c.rhs},
              {"slack", c.slack},
              {"boundary", c.boundary}};
}

std::string curve_row(double m) {
  std::string row = fmt(m) + "," + fmt(curve_P(m)) + "," + fmt(curve_R(m)) + ",";
  const auto p = p_of_m(m);
  row += p ? fmt(*p) : "NA";
  row += ",";
  const auto r = r_of_m(m);
  row += r ? fmt(r->q) + "," + std::string(to_string(r->branch)) : "NA,NA";
  return row;
}

std::vector<std::string> scan_rows(double lo, double step, std::size_t count, unsigned threads) {
  std::vector<std::string> rows(count);
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(count)));
  std::vector<std::exception_ptr> errors(threads);
  auto work = [&](unsigned id) {
    try {
      for (std::size_t i = id; i < count; i += threads) rows[i] = curve_row(lo + step * i);
    } catch (...) {
      errors[id] = std::current_exception();
    }
  };
  std::vector<std::thread> pool;
  for (unsigned id = 1; id < threads; ++id) pool.emplace_back(work, id);
  work(0);
  for (std::thread& t : pool) t.join();
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return rows;
}

void print_selftest(const SelftestReport& report, bool json, std::ostream& out) {
  if (json) {
    Json j;
    j["passed"] = report.passed();
    Json inv = Json::object();
    for (const InvariantResult& r : report.invariants) {
      inv[r.name] = {{"pass", r.failures == 0}, {"trials", r.trials}, {"failures", r.failures}};
      if (r.failures != 0) inv[r.name]["first_failure"] = r.first_failure;
    }
    j["invariants"] = inv;
    Json ids = Json::object();
    for (const IdentitySummary& s : report.appendix.summary()) {
      ids[s.id] = {{"pass", s.failures == 0}, {"points", s.points}, {"failures", s.failures}};
    }
    j["identities"] = ids;
    Json cross = Json::object();
    for (const CrossoverCheck& c : report.appendix.crossovers) {
      cross[c.id] = {{"pass", c.pass},
                     {"located", number_or_null(c.located)},
                     {"expected", c.expected}};
    }
    j["crossovers"] = cross;
    out << j.dump(2) << "\n";
    return;
  }
  auto tag = [](bool ok) { return ok ? "PASS" : "FAIL"; };
  for (const InvariantResult& r : report.invariants) {
    out << tag(r.failures == 0) << " invariant " << r.name << " (" << r.failures << "/"
        << r.trials << " failed)";
    if (r.failures != 0) out << ": " << r.first_failure;
    out << "\n";
  }
  for (const IdentitySummary& s : report.appendix.summary()) {
    out << tag(s.failures == 0) << " identity " << s.id << " (" << s.failures << "/" << s.points
        << " failed)\n";
  }
  for (const CrossoverCheck& c : report.appendix.crossovers) {
    out << tag(c.pass) << " crossover " << c.id << " located " << fmt(c.located) << " expected "
        << fmt(c.expected) << "\n";
  }
  out << "selftest: " << tag(report.passed()) << "\n";
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Unique expansions over {0,1,m}: evaluation, verdicts, critical bases, automata",
               "univoque"};
  app.require_subcommand(1);

  std::string seq_text;
  std::optional<double> m_opt;
  std::optional<std::string> alphabet_opt;
  double q = 0.0;

  auto* pi = app.add_subcommand("pi", "Evaluate pi_q of a sequence");
  pi->add_option("sequence", seq_text, "Sequence such as m1^w or mm1(m11m)^w")->required();
  pi->add_option("--m", m_opt, "Value of the digit m (alphabet {0,1,m})");
  pi->add_option("--alphabet", alphabet_opt, "Comma-separated integer digits, e.g. 0,1,2");
  pi->add_option("--q", q, "Base q > 1")->required();

  bool general = false;
  bool ternary_mode = false;
  auto* check = app.add_subcommand("check", "Decide uniqueness of an expansion (JSON)");
  check->add_option("sequence", seq_text, "Eventually periodic sequence")->required();
  check->add_option("--m", m_opt, "Value of the digit m (alphabet {0,1,m})");
  check->add_option("--alphabet", alphabet_opt, "Comma-separated integer digits");
  check->add_option("--q", q, "Base q > 1")->required();
  auto* general_flag = check->add_flag("--general", general, "Gap conditions over the alphabet");
  check->add_flag("--ternary", ternary_mode, "Zero-free test over {1,m}")->excludes(general_flag);

  double m_lo = 0.0;
  double m_hi = 0.0;
  double step = 0.0;
  unsigned threads = 1;
  auto* scan = app.add_subcommand("scan-curve", "CSV of P, R, p, r over an m-grid");
  scan->add_option("--m-lo", m_lo, "First m (>= 2)")->required();
  scan->add_option("--m-hi", m_hi, "Last m")->required();
  scan->add_option("--step", step, "Grid step")->required();
  scan->add_option("--threads", threads, "Worker threads")->check(CLI::PositiveNumber);

  std::vector<std::string> words;
  bool dot = false;
  bool classify = false;
  bool growth = false;
  bool untrimmed = false;
  std::optional<std::size_t> count;
  auto* automaton = app.add_subcommand("automaton", "Safety automaton of forbidden words over {1,m}");
  automaton->add_option("words", words, "Forbidden words, e.g. 111 1mmm")->required();
  automaton->add_flag("--dot", dot, "Print Graphviz DOT");
  automaton->add_flag("--classify", classify, "Print the growth class");
  automaton->add_flag("--growth", growth, "Print the growth rate");
  automaton->add_option("--count", count, "Count labels of length n <= 64");
  automaton->add_flag("--untrimmed", untrimmed,
                      "Count on the factor automaton (words avoiding the factors)");

  bool json = false;
  double perturb = 0.0;
  std::uint64_t seed = 1;
  auto* selftest = app.add_subcommand("selftest", "Run invariant and sign-identity suites");
  selftest->add_flag("--json", json, "Machine-readable report");
  selftest->add_option("--perturb-p", perturb, "Offset added to P_m (test hook)");
  selftest->add_option("--seed", seed, "Seed of the randomized invariants");

  auto* consts = app.add_subcommand("constants", "Print the boundary constants");
  consts->add_flag("--json", json, "JSON output");

  double m = 0.0;
  auto* critical = app.add_subcommand("critical", "P, R, p and r at one m");
  critical->add_option("--m", m, "Value of m (>= 2)")->required();

  std::size_t max_length = 7;
  auto* forbidden = app.add_subcommand("forbidden", "Minimal forbidden blocks up to a length");
  forbidden->add_option("--m", m, "Value of m")->required();
  forbidden->add_option("--q", q, "Base q in (2, R_m]")->required();
  forbidden->add_option("--max-length", max_length, "Longest block (1..16)");

  std::size_t depth = 64;
  auto* certify = app.add_subcommand("certify", "Certify blocks^inf inside the zero-free set");
  certify->add_option("blocks", words, "Blocks over {1,m}, e.g. (m^5)1 (m^6)1")->required();
  certify->add_option("--m", m, "Value of m")->required();
  certify->add_option("--q", q, "Base q > 2")->required();
  certify->add_option("--depth", depth, "Greedy search depth");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (pi->parsed()) {
      const Alphabet alphabet = choose_alphabet(alphabet_opt, m_opt);
      out << fmt(pi_eval(parse_infinite(seq_text, alphabet), q)) << "\n";
      return kOk;
    }
    if (check->parsed()) {
      const Alphabet alphabet = choose_alphabet(alphabet_opt, m_opt);
      const EPSeq c = parse_infinite(seq_text, alphabet);
      const Verdict v = ternary_mode ? check_v_membership(c, q) : check_univoque_general(c, q);
      double slack = INFINITY;
      for (const ConditionCheck& k : v.checks) slack = std::min(slack, k.slack);
      const Json j{{"sequence", format_seq(c)},
                   {"q", q},
                   {"mode", ternary_mode ? "ternary" : "general"},
                   {"verdict", to_string(v.kind)},
                   {"witness", v.witness ? check_json(*v.witness) : Json(nullptr)},
                   {"slack", number_or_null(slack)},
                   {"checks", v.checks.size()}};
      out << j.dump(2) << "\n";
      return kOk;
    }
    if (scan->parsed()) {
      if (!(m_lo >= 2.0) || !(m_hi > m_lo) || !(step > 0.0)) {
        throw DomainError("need 2 <= m-lo < m-hi and step > 0");
      }
      const double span = (m_hi - m_lo) / step;
      if (span > 1e7) throw DomainError("grid too large");
      const auto n = static_cast<std::size_t>(std::floor(span * (1.0 + 1e-12))) + 1;
      out << "m,P,R,p,r,branch\n";
      for (const std::string& row : scan_rows(m_lo, step, n, threads)) out << row << "\n";
      return kOk;
    }
    if (automaton->parsed()) {
      const std::vector<Word> forbidden_words = parse_blocks(words);
      const Automaton a = build_safety_automaton(forbidden_words);
      if (!dot && !classify && !growth && !count) {
        out << "states " << a.size() << "\nedges " << a.edge_count() << "\n";
      }
      if (classify) {
        const GrowthClass g = classify_growth(a);
        out << to_string(g.kind);
        if (g.kind == GrowthKind::FinitePaths) out << " " << g.path_count;
        out << "\n";
      }
      if (growth) out << fmt(growth_rate(a)) << "\n";
      if (count) {
        if (*count > 64) throw DomainError("--count must be <= 64");
        const Automaton& source = untrimmed ? build_factor_automaton(forbidden_words) : a;
        out << to_string(count_words(source, *count)) << "\n";
      }
      if (dot) out << export_dot(a);
      return kOk;
    }
    if (selftest->parsed()) {
      SuiteOptions options;
      options.p_offset = perturb;
      const SelftestReport report = run_selftest(options, seed);
      print_selftest(report, json, out);
      return report.passed() ? kOk : kFailure;
    }
    if (consts->parsed()) {
      const Constants& c = constants();
      const std::pair<const char*, Constant> rows[] = {
          {"alpha", c.alpha}, {"phi", c.phi}, {"m_d", c.m_d}, {"M_d", c.M_d},
          {"m_1", c.m_1},     {"q_1", c.q_1}, {"m_2", c.m_2}, {"m_3", c.m_3},
          {"m_4", c.m_4},     {"q_4", c.q_4}, {"kl_q_prime", c.kl_q_prime}};
      const std::string_view variant = matching_m3_variant(c.m_3.value);
      if (json) {
        Json j = Json::object();
        for (const auto& [name, k] : rows) {
          j[name] = {{"value", k.value}, {"provenance", to_string(k.provenance)}};
        }
        j["m_3_matches"] = variant.empty() ? Json(nullptr) : Json(variant);
        out << j.dump(2) << "\n";
      } else {
        for (const auto& [name, k] : rows) {
          out << name << " " << fmt(k.value) << " " << to_string(k.provenance) << "\n";
        }
        out << "m_3 matches " << (variant.empty() ? std::string_view("neither") : variant) << "\n";
      }
      return kOk;
    }
    if (critical->parsed()) {
      const auto p = p_of_m(m);
      const auto r = r_of_m(m);
      out << "m " << fmt(m) << "\nP " << fmt(curve_P(m)) << "\nR " << fmt(curve_R(m)) << "\np "
          << (p ? fmt(*p) : "NA") << "\nr " << (r ? fmt(r->q) : "NA") << "\nbranch "
          << (r ? std::string(to_string(r->branch)) : "NA") << "\n";
      return r ? kOk : kUnsupported;
    }
    if (forbidden->parsed()) {
      const Alphabet alphabet = Alphabet::ternary(m);
      for (const Word& w : scan_forbidden(m, q, max_length)) out << format_word(w, alphabet) << "\n";
      return kOk;
    }
    if (certify->parsed()) {
      const FamilyCertificate c = certify_family(FamilySpec{parse_blocks(words)}, m, q, depth);
      const Json j{{"certified", c.certified},
                   {"uncountable", c.uncountable},
                   {"tail_bound", c.tail_bound},
                   {"tail_limit", m - 1.0},
                   {"complement_bound", c.complement_bound},
                   {"complement_limit", 1.0}};
      out << j.dump(2) << "\n";
      return kOk;
    }
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kFailure;
  }
  return kInputError;
}

}  // namespace univoque::cli
