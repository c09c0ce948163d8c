#include <doctest.h>

#include "powersum/commands.hpp"
#include "powersum/report.hpp"

using namespace powersum;

namespace {

ReportInput rhs(std::uint64_t n, std::uint64_t m, const BigInt& r, Mode mode = Mode::NonNegative) {
  ReportInput in;
  in.n = n;
  in.m = m;
  in.rhs = r;
  in.mode = mode;
  return in;
}

ReportInput bc(std::uint64_t n, std::uint64_t m, const BigInt& b, const BigInt& c,
               Mode mode = Mode::NonNegative) {
  ReportInput in;
  in.n = n;
  in.m = m;
  in.b = b;
  in.c = c;
  in.mode = mode;
  return in;
}

void round_trip(const Report& r) {
  const std::string line = serialize(r);
  CHECK(line.find('\n') == std::string::npos);
  CHECK(parse_report(line) == r);
  CHECK(serialize(parse_report(line)) == line);
}

} // namespace

TEST_CASE("reports round-trip through JSON") {
  round_trip(run_analyze(rhs(6, 3, 233280)));
  round_trip(run_analyze(bc(2, 2, 3, 6)));
  round_trip(run_analyze(bc(2, 2, 0, 7)));
  round_trip(run_analyze(rhs(12, 9, 32015)));
  round_trip(run_analyze(rhs(3, 3, 9005)));
  round_trip(run_analyze(rhs(2, 2, 25)));
  round_trip(run_analyze(rhs(2, 3, 15)));
  round_trip(run_analyze(bc(30, 3, 1073743839, 154)));
  round_trip(run_analyze(bc(3, 2, 1, 125, Mode::Natural)));
  round_trip(run_analyze(bc(4, 2, 1, 42, Mode::Natural)));
  round_trip(run_analyze(bc(4, 4, 3, 5, Mode::Natural)));
  round_trip(run_analyze(rhs(3, 3, BigInt(1) << 70)));
  AnalysisOptions capped;
  capped.modulus_cap = 2;
  round_trip(run_analyze(rhs(2, 3, 15), capped));
  round_trip(run_count(rhs(4, 7, 73728)));
  round_trip(run_count(rhs(2, 2, 25), {}, true));
  round_trip(run_reduce(rhs(4, 7, 73728)));
  round_trip(run_reduce(bc(6, 3, 5, 6)));
  round_trip(run_phidiv(120));
  round_trip(run_phidiv(3));
}

TEST_CASE("big integers travel as exact decimal strings") {
  const BigInt big = boost::multiprecision::pow(BigInt(10), 60) + 7;
  const Report r = run_reduce(bc(4, 2, big, boost::multiprecision::pow(BigInt(2), 40)));
  const auto j = to_json(r);
  CHECK(j["input"]["b"] == big.str());
  CHECK(j["trace"]["original"]["c"] == "1099511627776");
  round_trip(r);
}

TEST_CASE("schema fields") {
  const auto j = to_json(run_analyze(rhs(6, 3, 233280)));
  for (const char* key : {"command", "input", "verdict", "certificate", "trace", "count", "elapsed_ms"}) {
    CHECK(j.contains(key));
  }
  CHECK(j["verdict"] == "insoluble");
  CHECK(j["certificate"]["theorem"] == "reduced_by");
  CHECK(j["certificate"]["inner"]["theorem"] == "gap_interval");
  CHECK(j["certificate"]["inner"]["params"]["l"] == "1");
  CHECK(j["trace"]["coefficient"]["reduced"] == "5");
}

TEST_CASE("malformed reports are rejected") {
  CHECK_THROWS_AS(parse_report("not json"), std::invalid_argument);
  CHECK_THROWS_AS(parse_report("{}"), std::invalid_argument);
  auto j = to_json(run_analyze(rhs(6, 3, 233280)));
  j["verdict"] = "maybe";
  CHECK_THROWS_AS(report_from_json(j), std::invalid_argument);
  j = to_json(run_analyze(rhs(6, 3, 233280)));
  j["certificate"]["inner"]["theorem"] = "no_such_theorem";
  CHECK_THROWS_AS(report_from_json(j), std::invalid_argument);
  j = to_json(run_analyze(rhs(6, 3, 233280)));
  j["input"]["rhs"] = "-5";
  CHECK_THROWS_AS(report_from_json(j), std::invalid_argument);
  j = to_json(run_analyze(rhs(6, 3, 233280)));
  j["input"]["n"] = "six";
  CHECK_THROWS_AS(report_from_json(j), std::invalid_argument);
}

TEST_CASE("text rendering names the argument") {
  const std::string t = render_text(run_analyze(rhs(6, 3, 233280)));
  CHECK(t.find("verdict: insoluble") != std::string::npos);
  CHECK(t.find("233280 -> 5") != std::string::npos);
  CHECK(t.find("gap interval") != std::string::npos);
  const std::string p = render_text(run_phidiv(3));
  CHECK(p.find("none") != std::string::npos);
}
