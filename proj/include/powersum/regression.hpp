#pragma once

// Worked examples replayed by `powersum verify-examples`. Each case runs one
// command and checks selected fields of the resulting Report. The table can
// be dumped to JSON, edited and loaded back.
//
// Expectation keys (all optional):
//   verdict        "solvable" | "insoluble" | "unknown"
//   theorem        name of the innermost certificate of the verdict
//   outer          name of the outermost certificate
//   modulus        modulus of the innermost residue certificate
//   family         zero-one family of the innermost certificate
//   fires          criteria that must fire on the reduced right-hand side,
//                  as "name" or "name@modulus"
//   count          exact count (decimal string)
//   oracle_count   independent oracle count of the original equation
//   reduced        reduced coefficient of the trace (decimal string)
//   stripped       [[prime, multiplicity], ...] removed from the coefficient
//   phi_divisors   [[prime, degree], ...]
// Every analyze case also checks the certificate with verify_certificate.

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "powersum/criteria.hpp"
#include "powersum/report.hpp"

namespace powersum {

struct RegressionCase {
  std::string id;
  std::vector<std::string> tags;
  std::string command; // analyze | count | reduce | phidiv
  ReportInput input;
  nlohmann::json expect = nlohmann::json::object();
};

struct CaseResult {
  std::string id;
  bool passed = false;
  std::string detail; // first mismatch, or a short summary on success
  double elapsed_ms = 0;
};

std::vector<RegressionCase> builtin_cases();

nlohmann::json cases_to_json(const std::vector<RegressionCase>& cases);
/// Throws std::invalid_argument on schema violations.
std::vector<RegressionCase> cases_from_json(const nlohmann::json& j);

/// Empty filter matches everything; otherwise a substring of the id or of a tag.
bool matches_filter(const RegressionCase& c, std::string_view filter);

/// Never throws: errors become failed results.
CaseResult run_case(const RegressionCase& c, const AnalysisOptions& options = {});

} // namespace powersum
