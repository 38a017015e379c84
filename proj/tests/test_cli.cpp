#include <doctest.h>
#include <json.hpp>

#include <cmath>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "fixtures.hpp"
#include "oracles/frozen_values.hpp"
#include "univoque/critical.hpp"

using univoque::cli::run_cli;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream in(line);
  for (std::string cell; std::getline(in, cell, ',');) out.push_back(cell);
  return out;
}

}  // namespace

TEST_CASE("cli pi") {
  Result r = run({"pi", "1^w", "--m", "2", "--q", "2"});
  CHECK(r.code == 0);
  CHECK(std::stod(r.out) == 1.0);
  CHECK(std::stod(run({"pi", "0^w", "--m", "3", "--q", "2.5"}).out) == 0.0);
  CHECK(std::abs(std::stod(run({"pi", "m(m1)^w", "--m", "4", "--q", "2.190216"}).out) - 3.0) < 1e-5);
  CHECK(std::stod(run({"pi", "20^w", "--alphabet", "0,1,2", "--q", "2"}).out) == 1.0);
  CHECK(run({"pi", "m^w1", "--m", "2", "--q", "2"}).code == 2);
  CHECK(run({"pi", "1^w", "--m", "2", "--q", "1"}).code == 2);
  CHECK(run({"pi", "1^w", "--q", "2"}).code == 2);
  CHECK(run({"pi", "1^w", "--m", "2"}).code == 2);
  CHECK(run({"--help"}).code == 0);
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
}

TEST_CASE("cli check") {
  Result r = run({"check", "(10)^w", "--alphabet", "0,1", "--q", "1.5"});
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["verdict"] == "ProvenNotUnique");
  CHECK(j["witness"]["lhs"].get<double>() == doctest::Approx(1.2));
  CHECK(j["witness"]["boundary"] == false);
  CHECK(j["slack"].get<double>() < 0.0);

  // key order is stable
  const auto first = r.out.find("\"verdict\"");
  CHECK(first < r.out.find("\"witness\""));
  CHECK(r.out.find("\"witness\"") < r.out.find("\"slack\"", r.out.find("\"witness\"") + 200));

  j = nlohmann::json::parse(run({"check", "m^w", "--m", "3", "--q", "2.4", "--ternary"}).out);
  CHECK(j["verdict"] == "ProvenUnique");
  CHECK(j["witness"].is_null());

  j = nlohmann::json::parse(run({"check", "(m1)^w", "--m", "3", "--q", "2.3", "--ternary"}).out);
  CHECK(j["mode"] == "ternary");
  CHECK(j["checks"] == 2);
  CHECK(j["slack"].is_number());

  j = nlohmann::json::parse(run({"check", "1^w", "--alphabet", "0,1,2", "--q", "2"}).out);
  CHECK(j["verdict"] == "ProvenNotUnique");
  CHECK(j["witness"]["boundary"] == true);

  CHECK(run({"check", "(m1)^w", "--m", "3", "--q", "2", "--ternary"}).code == 2);
  CHECK(run({"check", "(m1)^w", "--m", "3", "--q", "2.3", "--ternary", "--general"}).code == 2);
  CHECK(run({"check", "1^w", "--alphabet", "0,x", "--q", "1.5"}).code == 2);
}

TEST_CASE("cli scan-curve") {
  Result r = run({"scan-curve", "--m-lo", "2", "--m-hi", "2.32472", "--step", "0.01"});
  REQUIRE(r.code == 0);
  const auto rows = lines(r.out);
  REQUIRE(rows.front() == "m,P,R,p,r,branch");
  CHECK(rows.size() == 34);
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const auto cells = split(rows[i]);
    REQUIRE(cells.size() == 6);
    const double m = std::stod(cells[0]);
    CHECK(std::stod(cells[4]) == doctest::Approx(univoque::r_closed_form_comp0(m)).epsilon(1e-15));
    CHECK(cells[5] == "Comp0_full");
  }

  r = run({"scan-curve", "--m-lo", "3.30278", "--m-hi", "4.54646", "--step", "0.01"});
  for (std::size_t i = 1; i < lines(r.out).size(); ++i) CHECK(split(lines(r.out)[i])[5] == "Comp10_right");

  r = run({"scan-curve", "--m-lo", "2.5", "--m-hi", "2.7", "--step", "0.05"});
  for (std::size_t i = 1; i < lines(r.out).size(); ++i) {
    const auto cells = split(lines(r.out)[i]);
    CHECK(cells[3] == "NA");
    CHECK(cells[4] == "NA");
    CHECK(cells[5] == "NA");
  }

  const std::vector<std::string> base{"scan-curve", "--m-lo", "2", "--m-hi", "5", "--step", "0.01"};
  const std::string one = run(base).out;
  auto threaded = base;
  threaded.insert(threaded.end(), {"--threads", "4"});
  CHECK(run(threaded).out == one);
  CHECK(run(base).out == one);
  CHECK(one.find('\r') == std::string::npos);

  CHECK(run({"scan-curve", "--m-lo", "1.5", "--m-hi", "2", "--step", "0.1"}).code == 2);
  CHECK(run({"scan-curve", "--m-lo", "3", "--m-hi", "2", "--step", "0.1"}).code == 2);
  CHECK(run({"scan-curve", "--m-lo", "2", "--m-hi", "3", "--step", "0"}).code == 2);
}

TEST_CASE("cli automaton") {
  std::vector<std::string> seven{"automaton"};
  for (auto w : fixtures::kSevenWords) seven.emplace_back(w);
  auto classify = seven;
  classify.push_back("--classify");
  Result r = run(classify);
  CHECK(r.code == 0);
  CHECK(r.out == "Uncountable\n");

  classify.insert(classify.begin() + 1, std::string(fixtures::kEighthWord));
  CHECK(run(classify).out == "CountablyInfinite\n");

  CHECK(run({"automaton", "1m", "--count", "5"}).out == "6\n");
  CHECK(run({"automaton", "1m", "--count", "5", "--untrimmed"}).out == "6\n");
  CHECK(run({"automaton", "11", "--count", "3", "--untrimmed"}).out == "5\n");

  auto dot = seven;
  dot.push_back("--dot");
  r = run(dot);
  CHECK(r.out.rfind("digraph safety {", 0) == 0);
  CHECK(run(dot).out == r.out);

  CHECK(run({"automaton", "1m", "--growth"}).out == "1\n");
  CHECK(run({"automaton", "1m"}).out == "states 2\nedges 3\n");
  CHECK(run({"automaton", "10"}).code == 2);
  CHECK(run({"automaton", "1m", "--count", "65"}).code == 2);
}

TEST_CASE("cli selftest") {
  Result r = run({"selftest"});
  CHECK(r.code == 0);
  CHECK(r.out.find("selftest: PASS") != std::string::npos);

  r = run({"selftest", "--perturb-p", "1e-3"});
  CHECK(r.code != 0);
  CHECK(r.out.find("selftest: FAIL") != std::string::npos);

  r = run({"selftest", "--json"});
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["passed"] == true);
  CHECK(j["identities"].contains("m-ones-below-at-R"));
  CHECK(j["crossovers"]["m-m-one-at-m-minus-1"]["pass"] == true);
}

TEST_CASE("cli constants, critical, forbidden, certify") {
  Result r = run({"constants"});
  CHECK(r.code == 0);
  CHECK(r.out.find("m_3 matches 3.10214") != std::string::npos);
  const auto j = nlohmann::json::parse(run({"constants", "--json"}).out);
  CHECK(j["m_2"]["provenance"] == "published-approximate");
  CHECK(j["alpha"]["value"].get<double>() == doctest::Approx(oracle::kAlpha));

  r = run({"critical", "--m", "3"});
  CHECK(r.code == 0);
  CHECK(r.out.find("branch Comp10_mid") != std::string::npos);
  r = run({"critical", "--m", "2.7"});
  CHECK(r.code == 3);
  CHECK(r.out.find("r NA") != std::string::npos);
  CHECK(run({"critical", "--m", "9"}).code == 3);
  CHECK(run({"critical", "--m", "1.5"}).code == 2);

  r = run({"forbidden", "--m", "3", "--q", "2.3702", "--max-length", "7"});
  CHECK(r.code == 0);
  CHECK(lines(r.out) == std::vector<std::string>(fixtures::kSevenWords.begin(), fixtures::kSevenWords.end()));
  CHECK(run({"forbidden", "--m", "3", "--q", "2.7"}).code == 2);

  r = run({"certify", "(m^5)1", "(m^6)1", "--m", "3", "--q", "2.5"});
  CHECK(r.code == 0);
  const auto c = nlohmann::json::parse(r.out);
  CHECK(c["certified"] == true);
  CHECK(c["uncountable"] == true);
  CHECK(nlohmann::json::parse(run({"certify", "1m", "--m", "3", "--q", "2.1"}).out)["certified"] ==
        false);
}
