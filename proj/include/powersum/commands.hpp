#pragma once

// The work behind each CLI subcommand, returning a Report instead of
// printing. Shared by the CLI front end and the example regression runner.

#include "powersum/criteria.hpp"
#include "powersum/oracle.hpp"
#include "powersum/report.hpp"

namespace powersum {

/// The equation named by the input: b * c^n, or rhs * 1^n. c defaults to 1.
/// Throws std::invalid_argument if neither b nor rhs is given, or both are.
Equation equation_from_input(const ReportInput& input);

/// Engine limits derived from a single node budget: the enumeration may
/// visit `nodes` tuples, a convolution table may take nodes / 5 cells and
/// 20 * nodes steps. The default budget of 1e8 nodes gives the defaults of
/// OracleBudget.
OracleBudget budget_from_nodes(std::uint64_t nodes);

Report run_analyze(const ReportInput& input, const AnalysisOptions& options = {});

/// Exact count of sum x_i^n = rhs. With list = true the tuples are attached
/// when there are at most 1000 of them.
Report run_count(const ReportInput& input, const OracleBudget& budget = {}, bool list = false);

Report run_reduce(const ReportInput& input);

Report run_phidiv(std::uint64_t n);

/// 0 = solvable, 1 = insoluble, 2 = unknown.
int exit_code(Outcome outcome);

inline constexpr int exit_budget = 3;
inline constexpr int exit_usage = 4;

} // namespace powersum
