#include "powersum/commands.hpp"

#include <chrono>

namespace powersum {

namespace {

class Stopwatch {
public:
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
  }

private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

Report start(const char* command, const ReportInput& input) {
  Report r;
  r.command = command;
  r.input = input;
  return r;
}

} // namespace

Equation equation_from_input(const ReportInput& input) {
  if (input.rhs && (input.b || input.c)) {
    throw std::invalid_argument("give either --rhs or --b/--c, not both");
  }
  if (input.rhs) return Equation(input.n, input.m, *input.rhs, 1, input.mode);
  if (!input.b) throw std::invalid_argument("missing right-hand side: give --rhs or --b");
  return Equation(input.n, input.m, *input.b, input.c.value_or(1), input.mode);
}

OracleBudget budget_from_nodes(std::uint64_t nodes) {
  OracleBudget b;
  b.node_limit = nodes;
  b.table_entry_cap = nodes / 5;
  b.table_op_limit = nodes > UINT64_MAX / 20 ? UINT64_MAX : nodes * 20;
  return b;
}

Report run_analyze(const ReportInput& input, const AnalysisOptions& options) {
  Stopwatch sw;
  Report r = start("analyze", input);
  const Equation eq = equation_from_input(input);
  r.trace = reduce(eq);
  r.verdict = analyze(eq, options);
  r.elapsed_ms = sw.ms();
  return r;
}

Report run_count(const ReportInput& input, const OracleBudget& budget, bool list) {
  Stopwatch sw;
  Report r = start("count", input);
  const Equation eq = equation_from_input(input);
  const CountResult res = count_solutions(eq.n(), eq.m(), eq.rhs(), eq.mode(), budget);
  r.count = res.count;
  if (list && res.count <= 1000) {
    r.solutions = list_solutions(eq.n(), eq.m(), to_u64(eq.rhs()), eq.mode(), 1000);
  }
  r.elapsed_ms = sw.ms();
  return r;
}

Report run_reduce(const ReportInput& input) {
  Stopwatch sw;
  Report r = start("reduce", input);
  r.trace = reduce(equation_from_input(input));
  r.elapsed_ms = sw.ms();
  return r;
}

Report run_phidiv(std::uint64_t n) {
  Stopwatch sw;
  ReportInput input;
  input.n = n;
  Report r = start("phidiv", input);
  r.phi_divisors = all_phi_divisors(n);
  r.elapsed_ms = sw.ms();
  return r;
}

int exit_code(Outcome outcome) {
  switch (outcome) {
  case Outcome::Solvable: return 0;
  case Outcome::Insoluble: return 1;
  case Outcome::Unknown: return 2;
  }
  return 2;
}

} // namespace powersum
