#include <doctest.h>

#include <cmath>

#include "oracles/frozen_values.hpp"
#include "oracles/oracle.hpp"
#include "univoque/alphabet.hpp"
#include "univoque/error.hpp"
#include "univoque/evaluate.hpp"
#include "univoque/notation.hpp"
#include "univoque/sequence.hpp"

using namespace univoque;

TEST_CASE("alphabet validation") {
  CHECK_THROWS_AS(Alphabet({1.0}, "1"), DomainError);
  CHECK_THROWS_AS(Alphabet({1.0, 1.0}, "ab"), DomainError);
  CHECK_THROWS_AS(Alphabet({2.0, 1.0}, "ab"), DomainError);
  CHECK_THROWS_AS(Alphabet({0.0, 1.0}, "a("), DomainError);
  CHECK_THROWS_AS(Alphabet::ternary(1.5), DomainError);

  const Alphabet t = Alphabet::ternary(3.0);
  CHECK(t.size() == 3);
  CHECK(t.is_ternary());
  CHECK(t.glyphs() == "01m");
  CHECK(t.max_gap() == doctest::Approx(2.0));
  CHECK(t.iff_threshold() == doctest::Approx(2.5));
  CHECK(*t.symbol_of('m') == ternary::kM);
  CHECK_FALSE(t.symbol_of('2').has_value());

  const Alphabet b = Alphabet::from_digits({0.0, 1.0});
  CHECK(b.glyphs() == "01");
  CHECK_FALSE(b.is_ternary());
  CHECK(b.iff_threshold() == doctest::Approx(2.0));
}

TEST_CASE("canonical form") {
  const Alphabet a = Alphabet::ternary(3.0);
  SUBCASE("period reduced to its primitive root") {
    const EPSeq s(a, Word{}, ternary_word("1m1m1m"));
    CHECK(s.period() == ternary_word("1m"));
  }
  SUBCASE("preperiod tail absorbed into a rotated period") {
    const EPSeq s(a, ternary_word("mm1"), ternary_word("m1"));
    CHECK(s.preperiod() == ternary_word("m"));
    CHECK(s.period() == ternary_word("m1"));
    const EPSeq t(a, ternary_word("11"), ternary_word("1"));
    CHECK(t.preperiod().empty());
    CHECK(t.period() == ternary_word("1"));
  }
  SUBCASE("equal sequences written differently compare equal") {
    CHECK(ternary_seq(3, "1m", "1m") == ternary_seq(3, "", "1m"));
    CHECK(ternary_seq(3, "m", "1m") == ternary_seq(3, "", "m1"));
    CHECK_FALSE(ternary_seq(3, "m", "1") == ternary_seq(3, "", "1"));
  }
  SUBCASE("invalid input") {
    CHECK_THROWS_AS(EPSeq(a, Word{}, Word{}), DomainError);
    CHECK_THROWS_AS(EPSeq(a, Word{}, Word{7}), DomainError);
  }
}

TEST_CASE("indexing and shifts") {
  const EPSeq s = ternary_seq(3, "mm1", "m11m");
  CHECK(s.at(0) == ternary::kM);
  CHECK(s.at(2) == ternary::kOne);
  CHECK(s.at(3) == ternary::kM);
  CHECK(s.at(7) == ternary::kM);
  CHECK(shift(s, 3) == ternary_seq(3, "", "m11m"));
  CHECK(shift(ternary_seq(3, "", "1m"), 1) == ternary_seq(3, "", "m1"));
  CHECK(shift(s, 0) == s);
  CHECK(shift(s, 11) == shift(s, 7));
}

TEST_CASE("lexicographic order") {
  CHECK(lex_cmp(ternary_seq(3, "", "1m"), ternary_seq(3, "", "m")) == Order::Less);
  CHECK(lex_cmp(ternary_seq(3, "m", "1"), ternary_seq(3, "m", "1")) == Order::Equal);
  CHECK(lex_cmp(ternary_seq(3, "m", "1m"), ternary_seq(3, "m", "m1")) == Order::Less);
  CHECK(lex_cmp(ternary_seq(3, "", "m1"), ternary_seq(3, "", "1m")) == Order::Greater);
  // differ only after the preperiods and a full period overlap
  CHECK(lex_cmp(ternary_seq(3, "", "11m"), ternary_seq(3, "", "11m11m11m1m")) == Order::Less);
}

TEST_CASE("notation parsing") {
  const Alphabet a = Alphabet::ternary(2.0);
  CHECK(parse_infinite("m1^w", a) == EPSeq(a, ternary_word("m"), ternary_word("1")));
  CHECK(parse_infinite("mm1(m11m)^w", a) == ternary_seq(2, "mm1", "m11m"));
  CHECK(parse_infinite("(1m^2)^w", a) == ternary_seq(2, "", "1mm"));
  CHECK(parse_infinite("(m1)^2(1)^w", a) == ternary_seq(2, "m1m", "1"));
  CHECK(parse_word("1m^3", a) == ternary_word("1mmm"));
  CHECK(parse_word("(1m)^2m", a) == ternary_word("1m1mm"));
  CHECK(std::holds_alternative<Word>(parse_seq("11", a)));

  auto offset_of = [&](std::string_view text) -> std::size_t {
    try {
      parse_seq(text, a);
    } catch (const ParseError& e) {
      return e.offset();
    }
    FAIL("no error for " << text);
    return 0;
  };
  CHECK_THROWS_AS(parse_seq("m^w1", a), ParseError);
  CHECK(offset_of("m^w1") == 3);
  CHECK_THROWS_AS(parse_seq("12^w", a), ParseError);
  CHECK(offset_of("12^w") == 1);
  CHECK_THROWS_AS(parse_seq("()^w", a), ParseError);
  CHECK_THROWS_AS(parse_seq("(1m", a), ParseError);
  CHECK_THROWS_AS(parse_seq("1^0", a), ParseError);
  CHECK_THROWS_AS(parse_seq("(1^w)^w", a), ParseError);
  CHECK_THROWS_AS(parse_infinite("11", a), ParseError);
  CHECK_THROWS_AS(parse_word("1^w", a), ParseError);
}

TEST_CASE("formatting") {
  CHECK(format_seq(ternary_seq(3, "m", "1")) == "m1^w");
  CHECK(format_seq(ternary_seq(3, "mm1", "m11m")) == "mm1(m11m)^w");
  CHECK(format_seq(ternary_seq(3, "", "1m1m")) == "(1m)^w");
  CHECK(format_word(ternary_word("1mm"), Alphabet::ternary(3)) == "1mm");
}

TEST_CASE("pi evaluation examples") {
  const Alphabet a012 = Alphabet::from_digits({0, 1, 2});
  CHECK(pi_eval(parse_infinite("1^w", a012), 2.0) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(pi_eval(parse_infinite("20^w", a012), 2.0) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(pi_eval(ternary_seq(3, "", "0"), 2.5) == 0.0);
  CHECK(std::abs(pi_eval(ternary_seq(2, "m", "1"), oracle::kR2) - 1.0) < 1e-12);
  CHECK_THROWS_AS(pi_eval(ternary_seq(2, "m", "1"), 1.0), DomainError);
  CHECK_THROWS_AS(pi_eval(ternary_seq(2, "m", "1"), 0.5), DomainError);
}

TEST_CASE("truncated evaluation") {
  const Alphabet a012 = Alphabet::from_digits({0, 1, 2});
  CHECK(pi_eval_truncated(parse_infinite("1^w", a012), 2.0, 10) == 1.0 - std::ldexp(1.0, -10));
  CHECK(pi_eval_truncated(ternary_seq(3, "m", "1"), 3.0, 1) == 1.0);
  const EPSeq s = ternary_seq(3, "mm1", "m11m");
  for (double q : {1.2, 2.0, 3.7}) {
    const double gap = std::abs(pi_eval(s, q) - pi_eval_truncated(s, q, 400));
    CHECK(gap <= 3.0 * std::pow(q, -400.0) / (q - 1.0) + 1e-12);
  }
}

TEST_CASE("complement evaluation") {
  CHECK(pi_complement(ternary_seq(3, "", "m"), 2.5) == doctest::Approx(0.0));
  CHECK(pi_complement(ternary_seq(3, "", "1"), 3.0) == doctest::Approx(1.0));
  const double expected = 3.0 / 1.5 - oracle::kPiOneMAt3_2_5;
  CHECK(std::abs(pi_complement(ternary_seq(3, "", "1m"), 2.5) - expected) < 1e-14);
  const long double digitwise =
      oracle::digit_sum({}, {2.0, 0.0}, 2.5L);  // (m - c_i) digits
  CHECK(std::abs(pi_complement(ternary_seq(3, "", "1m"), 2.5) - static_cast<double>(digitwise)) <
        1e-14);
  CHECK_THROWS_AS(pi_complement(ternary_seq(3, "0", "1"), 2.5), DomainError);
  CHECK_THROWS_AS(pi_complement(EPSeq(Alphabet::from_digits({0, 1}), Word{}, Word{1}), 2.5),
                  DomainError);
}

TEST_CASE("bounded evaluation carries a small error bound") {
  const BoundedReal r = pi_eval_bounded(ternary_seq(3, "mm1", "m11m"), 2.37);
  CHECK(r.error > 0.0);
  CHECK(r.error < 1e-13);
  CHECK(r.value == pi_eval(ternary_seq(3, "mm1", "m11m"), 2.37));
}

TEST_CASE("word evaluation") {
  const Alphabet a = Alphabet::ternary(3.0);
  CHECK(pi_word(ternary_word("m1"), a, 2.0) == doctest::Approx(3.0 / 2 + 1.0 / 4));
  // 1 -> m-1, m -> 0
  CHECK(pi_word_complement(ternary_word("1m1"), 3.0, 2.0) == doctest::Approx(2.0 / 2 + 2.0 / 8));
  CHECK_THROWS_AS(pi_word_complement(ternary_word("10"), 3.0, 2.0), DomainError);
}
