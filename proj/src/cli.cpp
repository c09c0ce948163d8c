#include "powersum/cli.hpp"

#include <algorithm>
#include <fstream>
#include <optional>

#include <CLI11.hpp>

#include "powersum/commands.hpp"
#include "powersum/int_expr.hpp"
#include "powersum/numtheory.hpp"
#include "powersum/regression.hpp"

namespace powersum {

namespace {

// Raw flag values; integers stay as text until the command runs so that
// expressions like 2^5*3^2 can be parsed exactly.
struct Flags {
  std::string n, m, b, c, rhs;
  bool natural = false;
  bool json = false;
  bool list = false;
  bool no_oracle = false;
  std::optional<std::uint64_t> oracle_budget;
  std::optional<std::uint64_t> modulus_cap;
  std::string expectations;
  std::string filter;
  bool dump = false;
};

class UsageError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

std::uint64_t small_int(const std::string& text, const char* flag) {
  try {
    return to_u64(parse_integer_expression(text));
  } catch (const std::out_of_range&) {
    throw UsageError(std::string(flag) + " is too large");
  }
}

std::optional<BigInt> opt_big(const std::string& text) {
  if (text.empty()) return std::nullopt;
  return parse_integer_expression(text);
}

ReportInput input_from(const Flags& f, bool need_m) {
  ReportInput in;
  in.n = small_int(f.n, "--n");
  if (need_m) in.m = small_int(f.m, "--m");
  in.b = opt_big(f.b);
  in.c = opt_big(f.c);
  in.rhs = opt_big(f.rhs);
  in.mode = f.natural ? Mode::Natural : Mode::NonNegative;
  if (in.c && !in.b) throw UsageError("--c needs --b");
  return in;
}

AnalysisOptions analysis_options(const Flags& f) {
  AnalysisOptions o;
  if (f.oracle_budget) o.oracle = budget_from_nodes(*f.oracle_budget);
  if (f.modulus_cap) o.modulus_cap = *f.modulus_cap;
  o.use_oracle = !f.no_oracle;
  return o;
}

void emit(const Report& r, const Flags& f, std::ostream& out) {
  if (f.json) {
    out << serialize(r) << '\n';
  } else {
    out << render_text(r);
  }
}

int verify_examples(const Flags& f, std::ostream& out, std::ostream& err) {
  std::vector<RegressionCase> cases;
  if (f.expectations.empty()) {
    cases = builtin_cases();
  } else {
    std::ifstream in(f.expectations);
    if (!in) throw UsageError("cannot open expectations file '" + f.expectations + "'");
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
      throw UsageError("expectations file is not valid JSON: " + std::string(e.what()));
    }
    try {
      cases = cases_from_json(j);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }
  if (f.dump) {
    out << cases_to_json(cases).dump(2) << '\n';
    return 0;
  }
  const AnalysisOptions options = analysis_options(f);
  std::size_t ran = 0, passed = 0;
  for (const auto& c : cases) {
    if (!matches_filter(c, f.filter)) continue;
    const CaseResult res = run_case(c, options);
    ++ran;
    if (res.passed) ++passed;
    if (f.json) {
      out << nlohmann::json{{"id", res.id}, {"passed", res.passed}, {"detail", res.detail},
                            {"elapsed_ms", res.elapsed_ms}}
                 .dump()
          << '\n';
    } else {
      out << (res.passed ? "PASS " : "FAIL ") << res.id << ": " << res.detail << '\n';
    }
  }
  if (ran == 0) {
    err << "error: no example matches filter '" << f.filter << "'\n";
    return exit_usage;
  }
  if (!f.json) out << passed << "/" << ran << " examples passed\n";
  return passed == ran ? 0 : 1;
}

void equation_flags(CLI::App* cmd, Flags& f, bool with_bc) {
  cmd->add_option("--n", f.n, "exponent n >= 2")->required();
  cmd->add_option("--m", f.m, "number of terms m >= 2")->required();
  auto* rhs = cmd->add_option("--rhs", f.rhs, "right-hand side N (taken as b = N, c = 1)");
  if (with_bc) {
    auto* b = cmd->add_option("--b", f.b, "coefficient b >= 0");
    cmd->add_option("--c", f.c, "base c >= 1 (default 1)");
    rhs->excludes(b);
  } else {
    rhs->required();
  }
  cmd->add_flag("--natural", f.natural, "count positive solutions only");
  cmd->add_flag("--json", f.json, "one JSON object per line on stdout");
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Solvability of sum_{i=1..m} x_i^n = b c^n in non-negative or positive integers",
               "powersum"};
  app.require_subcommand(1);
  Flags f;

  auto* analyze_cmd = app.add_subcommand("analyze", "decide solvability and print a certificate");
  equation_flags(analyze_cmd, f, true);
  analyze_cmd->add_option("--oracle-budget", f.oracle_budget, "enumeration node budget");
  analyze_cmd->add_option("--modulus-cap", f.modulus_cap, "largest modulus for residue sumsets");
  analyze_cmd->add_flag("--no-oracle", f.no_oracle, "never fall back to exact counting");

  auto* count_cmd = app.add_subcommand("count", "exact number of ordered solutions");
  equation_flags(count_cmd, f, false);
  count_cmd->add_flag("--list", f.list, "also list the solutions when there are at most 1000");
  count_cmd->add_option("--oracle-budget", f.oracle_budget, "enumeration node budget");

  auto* reduce_cmd = app.add_subcommand("reduce", "strip eligible phi-divisor powers");
  equation_flags(reduce_cmd, f, true);

  auto* phidiv_cmd = app.add_subcommand("phidiv", "list the phi-divisors of n with their degrees");
  phidiv_cmd->add_option("--n", f.n, "exponent n >= 1")->required();
  phidiv_cmd->add_flag("--json", f.json, "one JSON object per line on stdout");

  auto* verify_cmd = app.add_subcommand("verify-examples", "replay the worked examples");
  verify_cmd->add_option("--expectations", f.expectations, "JSON case file instead of the built-in table");
  verify_cmd->add_option("--filter", f.filter, "only cases whose id or a tag contains this text");
  verify_cmd->add_flag("--dump-expectations", f.dump, "print the case table as JSON and exit");
  verify_cmd->add_flag("--json", f.json, "one JSON object per case");
  verify_cmd->add_option("--oracle-budget", f.oracle_budget, "enumeration node budget");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : exit_usage;
  }

  try {
    if (analyze_cmd->parsed()) {
      if (f.b.empty() && f.rhs.empty()) throw UsageError("analyze needs --rhs or --b");
      const Report r = run_analyze(input_from(f, true), analysis_options(f));
      emit(r, f, out);
      return exit_code(r.verdict->outcome);
    }
    if (count_cmd->parsed()) {
      OracleBudget budget;
      if (f.oracle_budget) budget = budget_from_nodes(*f.oracle_budget);
      const Report r = run_count(input_from(f, true), budget, f.list);
      emit(r, f, out);
      if (f.list && r.solutions.empty() && *r.count > 0) {
        err << "note: " << *r.count << " solutions, too many to list\n";
      }
      return 0;
    }
    if (reduce_cmd->parsed()) {
      if (f.b.empty() && f.rhs.empty()) throw UsageError("reduce needs --rhs or --b");
      emit(run_reduce(input_from(f, true)), f, out);
      return 0;
    }
    if (phidiv_cmd->parsed()) {
      const std::uint64_t n = small_int(f.n, "--n");
      if (n < 1) throw UsageError("--n must be positive");
      emit(run_phidiv(n), f, out);
      return 0;
    }
    return verify_examples(f, out, err);
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << '\n';
    return exit_budget;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return exit_usage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return exit_usage;
  }
}

} // namespace powersum
