#pragma once

// What a CLI command produced, in a form that serializes to one JSON line
// and parses back to an identical value. Big integers travel as decimal
// strings so no precision is lost.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "powersum/core.hpp"
#include "powersum/criteria.hpp"
#include "powersum/phidiv.hpp"
#include "powersum/reduction.hpp"

namespace powersum {

/// Echo of the command line. Either (b, c) or rhs is set for equation
/// commands; phidiv only sets n.
struct ReportInput {
  std::uint64_t n = 0;
  std::uint64_t m = 0;
  std::optional<BigInt> b;
  std::optional<BigInt> c;
  std::optional<BigInt> rhs;
  Mode mode = Mode::NonNegative;

  friend bool operator==(const ReportInput&, const ReportInput&) = default;
};

struct Report {
  std::string command;
  ReportInput input;
  std::optional<Verdict> verdict;
  /// Only for reports without a verdict; an analysis carries its count in
  /// verdict->count. Both serialize to the same "count" field.
  std::optional<BigInt> count;
  std::optional<Reduction> trace;
  std::vector<PhiDivisor> phi_divisors;
  std::vector<std::vector<std::uint64_t>> solutions;
  double elapsed_ms = 0;

  friend bool operator==(const Report&, const Report&) = default;
};

nlohmann::json to_json(const Equation& eq);
Equation equation_from_json(const nlohmann::json& j);

nlohmann::json to_json(const Reduction& red);
Reduction reduction_from_json(const nlohmann::json& j);

/// {"theorem": name, "params": {...}} plus "inner" for reduced_by.
nlohmann::json to_json(const Certificate& cert);
Certificate certificate_from_json(const nlohmann::json& j);

nlohmann::json to_json(const Report& report);
/// Throws std::invalid_argument on schema violations.
Report report_from_json(const nlohmann::json& j);

/// One-line JSON form used for machine output.
std::string serialize(const Report& report);
Report parse_report(const std::string& line);

/// Multi-line human-readable form.
std::string render_text(const Report& report);
std::string describe(const Certificate& cert, std::uint64_t n, std::uint64_t m);

} // namespace powersum
