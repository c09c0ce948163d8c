#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "powersum/cli.hpp"
#include "powersum/report.hpp"

using namespace powersum;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> v;
  std::istringstream is(s);
  for (std::string l; std::getline(is, l);) v.push_back(l);
  return v;
}

std::string temp_path(const char* name) {
  return (std::filesystem::temp_directory_path() / name).string();
}

} // namespace

TEST_CASE("analyze exit codes follow the verdict only") {
  const std::vector<std::pair<std::vector<std::string>, int>> cases = {
      {{"analyze", "--n", "6", "--m", "3", "--rhs", "233280"}, 1},
      {{"analyze", "--n", "2", "--m", "2", "--b", "3", "--c", "6"}, 1},
      {{"analyze", "--n", "2", "--m", "2", "--b", "0", "--c", "7"}, 0},
      {{"analyze", "--n", "2", "--m", "2", "--rhs", "25"}, 0},
      {{"analyze", "--n", "3", "--m", "3", "--rhs", "2^70"}, 2},
      {{"analyze", "--n", "2", "--m", "3", "--rhs", "4^3*(8*5+7)"}, 1},
      {{"analyze", "--n", "3", "--m", "2", "--b", "1", "--c", "5^2", "--natural"}, 1},
      {{"analyze", "--n", "2", "--m", "3", "--rhs", "5", "--no-oracle"}, 2},
  };
  for (const auto& [args, code] : cases) {
    CHECK(run(args).code == code);
    auto json_args = args;
    json_args.push_back("--json");
    const Run j = run(json_args);
    CHECK(j.code == code);
    REQUIRE(lines(j.out).size() == 1);
    const Report r = parse_report(lines(j.out)[0]);
    CHECK(r.command == "analyze");
    REQUIRE(r.verdict);
  }
}

TEST_CASE("analyze output") {
  const Run r = run({"analyze", "--n", "6", "--m", "3", "--rhs", "233280", "--json"});
  const Report rep = parse_report(lines(r.out)[0]);
  CHECK(rep.verdict->outcome == Outcome::Insoluble);
  CHECK(rep.trace->coefficient.reduced == 5);
  CHECK(*rep.input.rhs == 233280);
  CHECK_FALSE(rep.input.b);
  const Run t = run({"analyze", "--n", "2", "--m", "2", "--b", "3", "--c", "6"});
  CHECK(t.out.find("insoluble") != std::string::npos);
}

TEST_CASE("count") {
  Run r = run({"count", "--n", "4", "--m", "7", "--rhs", "73728", "--json"});
  CHECK(r.code == 0);
  CHECK(*parse_report(lines(r.out)[0]).count == 105);
  r = run({"count", "--n", "2", "--m", "2", "--rhs", "25", "--json", "--list"});
  const Report rep = parse_report(lines(r.out)[0]);
  CHECK(rep.solutions.size() == 4);
  r = run({"count", "--n", "3", "--m", "3", "--rhs", "9005"});
  CHECK(r.out.find("count: 0") != std::string::npos);
  r = run({"count", "--n", "2", "--m", "3", "--rhs", "10^6", "--oracle-budget", "0"});
  CHECK(r.code == 3);
  CHECK(r.out.empty());
  CHECK(r.err.find("budget") != std::string::npos);
  r = run({"count", "--n", "2", "--m", "2", "--rhs", "2^70"});
  CHECK(r.code == 3);
  r = run({"count", "--n", "2", "--m", "6", "--rhs", "100", "--list"});
  CHECK(r.code == 0);
  CHECK(r.err.find("too many") != std::string::npos);
}

TEST_CASE("reduce and phidiv") {
  Run r = run({"reduce", "--n", "4", "--m", "7", "--rhs", "73728", "--json"});
  CHECK(r.code == 0);
  const Report rep = parse_report(lines(r.out)[0]);
  CHECK(rep.trace->coefficient.reduced == 18);
  REQUIRE(rep.trace->coefficient.stripped.size() == 1);
  CHECK(rep.trace->coefficient.stripped[0].multiplicity == 3);
  r = run({"phidiv", "--n", "2", "--json"});
  CHECK(parse_report(lines(r.out)[0]).phi_divisors == std::vector<PhiDivisor>{{2, 2, 4}, {3, 1, 3}});
  r = run({"phidiv", "--n", "3", "--json"});
  CHECK(parse_report(lines(r.out)[0]).phi_divisors.empty());
  r = run({"phidiv", "--n", "120"});
  CHECK(r.out.find("(2, 4) (3, 2) (5, 2) (7, 1) (11, 1) (13, 1)") != std::string::npos);
}

TEST_CASE("usage errors") {
  const std::vector<std::vector<std::string>> bad = {
      {},
      {"frobnicate"},
      {"analyze", "--n", "1", "--m", "3", "--rhs", "5"},
      {"analyze", "--n", "2", "--m", "1", "--rhs", "5"},
      {"analyze", "--n", "2", "--m", "2", "--rhs", "2^^3"},
      {"analyze", "--n", "2", "--m", "2"},
      {"analyze", "--n", "2", "--rhs", "5"},
      {"analyze", "--n", "2", "--m", "2", "--rhs", "5", "--b", "5"},
      {"analyze", "--n", "2", "--m", "2", "--c", "5"},
      {"analyze", "--n", "2", "--m", "2", "--b", "1", "--c", "0"},
      {"analyze", "--n", "2^64", "--m", "2", "--rhs", "5"},
      {"count", "--n", "2", "--m", "2"},
      {"phidiv", "--n", "0"},
      {"phidiv", "--n", "x"},
  };
  for (const auto& args : bad) {
    const Run r = run(args);
    CHECK_MESSAGE(r.code == 4, (args.empty() ? std::string("<none>") : args[0]) << " " << r.err);
    CHECK(!r.err.empty());
  }
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("verify-examples") {
  Run r = run({"verify-examples", "--filter", "standard"});
  CHECK(r.code == 0);
  for (const auto& l : lines(r.out)) {
    if (l.rfind("PASS", 0) == 0 || l.rfind("FAIL", 0) == 0) CHECK(l.rfind("PASS", 0) == 0);
  }
  CHECK(r.out.find("standard-dodecic-b5212-c105") != std::string::npos);
  CHECK(r.out.find("phidiv-120") == std::string::npos);

  r = run({"verify-examples", "--filter", "no-such-case"});
  CHECK(r.code == 4);

  // Dump, reload unchanged, then corrupt one expectation.
  r = run({"verify-examples", "--dump-expectations"});
  CHECK(r.code == 0);
  const std::string good = temp_path("powersum_expect_good.json");
  const std::string bad = temp_path("powersum_expect_bad.json");
  std::ofstream(good) << r.out;
  auto j = nlohmann::json::parse(r.out);
  bool corrupted = false;
  for (auto& c : j) {
    if (c["id"] == "quartic-seven-73728-count") {
      c["expect"]["count"] = "106";
      corrupted = true;
    }
  }
  REQUIRE(corrupted);
  std::ofstream(bad) << j.dump();
  r = run({"verify-examples", "--expectations", good, "--filter", "quartic"});
  CHECK(r.code == 0);
  r = run({"verify-examples", "--expectations", bad, "--filter", "quartic"});
  CHECK(r.code == 1);
  CHECK(r.out.find("FAIL quartic-seven-73728-count") != std::string::npos);

  const std::string broken = temp_path("powersum_expect_broken.json");
  std::ofstream(broken) << "[{\"id\": ";
  CHECK(run({"verify-examples", "--expectations", broken}).code == 4);
  CHECK(run({"verify-examples", "--expectations", temp_path("powersum_missing.json")}).code == 4);
  std::remove(good.c_str());
  std::remove(bad.c_str());
  std::remove(broken.c_str());
}
