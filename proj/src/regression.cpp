#include "powersum/regression.hpp"

#include <chrono>

#include "powersum/commands.hpp"

namespace powersum {

using nlohmann::json;

namespace {

ReportInput rhs_input(std::uint64_t n, std::uint64_t m, const BigInt& rhs, Mode mode = Mode::NonNegative) {
  ReportInput in;
  in.n = n;
  in.m = m;
  in.rhs = rhs;
  in.mode = mode;
  return in;
}

ReportInput bc_input(std::uint64_t n, std::uint64_t m, const BigInt& b, const BigInt& c,
                     Mode mode = Mode::NonNegative) {
  ReportInput in;
  in.n = n;
  in.m = m;
  in.b = b;
  in.c = c;
  in.mode = mode;
  return in;
}

ReportInput phidiv_input(std::uint64_t n) {
  ReportInput in;
  in.n = n;
  return in;
}

BigInt pow_big(std::uint64_t base, unsigned exp) {
  return boost::multiprecision::pow(BigInt(base), exp);
}

std::optional<std::uint64_t> modulus_of(const Certificate& cert) {
  if (auto* z = std::get_if<ResidueZeroOne>(&cert.value)) return z->modulus;
  if (auto* p = std::get_if<ResiduePlusMinus>(&cert.value)) return p->modulus;
  if (auto* g = std::get_if<GeneralResidue>(&cert.value)) return g->modulus;
  return std::nullopt;
}

std::string fire_label(const Certificate& cert) {
  std::string s(cert.name());
  if (auto mod = modulus_of(cert)) s += "@" + std::to_string(*mod);
  return s;
}

json pairs(const std::vector<StrippedFactor>& fs) {
  json out = json::array();
  for (const auto& f : fs) out.push_back({f.divisor.prime, f.multiplicity});
  return out;
}

struct Mismatch {
  std::string what;
};

void expect_eq(const json& want, const json& got, const std::string& key) {
  if (want != got) throw Mismatch{key + ": expected " + want.dump() + ", got " + got.dump()};
}

void check(const RegressionCase& c, const Report& r, const AnalysisOptions& options) {
  const json& e = c.expect;
  if (e.contains("verdict")) {
    expect_eq(e["verdict"], r.verdict ? json(to_string(r.verdict->outcome)) : json(nullptr), "verdict");
  }
  const Certificate* cert = r.verdict && r.verdict->certificate ? &*r.verdict->certificate : nullptr;
  if (e.contains("outer")) expect_eq(e["outer"], cert ? json(cert->name()) : json(nullptr), "outer");
  if (e.contains("theorem")) {
    expect_eq(e["theorem"], cert ? json(cert->innermost().name()) : json(nullptr), "theorem");
  }
  if (e.contains("modulus")) {
    std::optional<std::uint64_t> mod = cert ? modulus_of(cert->innermost()) : std::nullopt;
    expect_eq(e["modulus"], mod ? json(*mod) : json(nullptr), "modulus");
  }
  if (e.contains("family")) {
    const auto* z = cert ? std::get_if<ResidueZeroOne>(&cert->innermost().value) : nullptr;
    expect_eq(e["family"], z ? json(family_name(z->family)) : json(nullptr), "family");
  }
  if (c.command == "analyze" && cert) {
    if (!verify_certificate(*cert, equation_from_input(c.input))) {
      throw Mismatch{"certificate " + std::string(cert->name()) + " does not verify"};
    }
  }
  if (e.contains("fires")) {
    if (!r.trace) throw Mismatch{"fires: report has no reduction trace"};
    const Equation res = r.trace->result();
    Analyzer an(res.n(), res.m(), options);
    std::vector<std::string> fired;
    if (res.rhs() > res.m()) {
      for (const auto& f : an.all_certificates(res.rhs())) fired.push_back(fire_label(f));
    }
    for (const auto& want : e["fires"]) {
      const std::string w = want.get<std::string>();
      bool found = false;
      for (const auto& f : fired) {
        if (f == w || (w.find('@') == std::string::npos && f.substr(0, f.find('@')) == w)) found = true;
      }
      if (!found) throw Mismatch{"fires: " + w + " did not fire (fired: " + json(fired).dump() + ")"};
    }
  }
  if (e.contains("count")) {
    const std::optional<BigInt>& count = r.verdict ? r.verdict->count : r.count;
    expect_eq(e["count"], count ? json(count->str()) : json(nullptr), "count");
  }
  if (e.contains("oracle_count")) {
    const Equation eq = equation_from_input(c.input);
    const BigInt got = count_solutions(eq.n(), eq.m(), eq.rhs(), eq.mode(), options.oracle).count;
    expect_eq(e["oracle_count"], json(got.str()), "oracle_count");
  }
  if (e.contains("reduced")) {
    expect_eq(e["reduced"], r.trace ? json(r.trace->coefficient.reduced.str()) : json(nullptr), "reduced");
  }
  if (e.contains("stripped")) {
    expect_eq(e["stripped"], r.trace ? pairs(r.trace->coefficient.stripped) : json(nullptr), "stripped");
  }
  if (e.contains("phi_divisors")) {
    json got = json::array();
    for (const auto& pd : r.phi_divisors) got.push_back({pd.prime, pd.degree});
    expect_eq(e["phi_divisors"], got, "phi_divisors");
  }
}

} // namespace

std::vector<RegressionCase> builtin_cases() {
  std::vector<RegressionCase> cs;
  auto add = [&](std::string id, std::vector<std::string> tags, std::string command, ReportInput in,
                 json expect) {
    cs.push_back({std::move(id), std::move(tags), std::move(command), std::move(in), std::move(expect)});
  };
  const Mode nat = Mode::Natural;

  // Coefficient reduction.
  add("sextic-three-233280", {"reduction", "analyze"}, "analyze", rhs_input(6, 3, 233280),
      {{"verdict", "insoluble"}, {"outer", "reduced_by"}, {"reduced", "5"},
       {"stripped", json::array({{2, 1}, {3, 1}})}, {"oracle_count", "0"}});
  add("sextic-three-233280-count", {"reduction", "count"}, "count", rhs_input(6, 3, 233280),
      {{"count", "0"}});
  add("quartic-seven-73728-count", {"reduction", "count"}, "count", rhs_input(4, 7, 73728),
      {{"count", "105"}});
  add("quartic-seven-18-count", {"reduction", "count"}, "count", rhs_input(4, 7, 18),
      {{"count", "105"}});
  add("quartic-seven-73728-reduce", {"reduction", "reduce"}, "reduce", rhs_input(4, 7, 73728),
      {{"reduced", "18"}, {"stripped", json::array({{2, 3}})}});

  // Small counts.
  add("squares-two-25", {"count"}, "count", rhs_input(2, 2, 25), {{"count", "4"}});
  add("squares-two-25-natural", {"count", "natural"}, "count", rhs_input(2, 2, 25, nat),
      {{"count", "2"}});
  add("cubes-three-9005-count", {"count", "plus-minus"}, "count", rhs_input(3, 3, 9005),
      {{"count", "0"}});

  // Sums of three squares avoid 4^s (8l + 7).
  for (unsigned s = 0; s <= 3; ++s) {
    for (unsigned l = 0; l <= 5; ++l) {
      const BigInt rhs = pow_big(4, s) * (8 * l + 7);
      add("three-squares-s" + std::to_string(s) + "-l" + std::to_string(l),
          {"three-squares", "reduction"}, "analyze", rhs_input(2, 3, rhs),
          {{"verdict", "insoluble"}, {"reduced", std::to_string(8 * l + 7)}, {"oracle_count", "0"}});
    }
  }

  // One criterion per family, each with an oracle confirmation.
  for (std::uint64_t m = 2; m <= 14; ++m) {
    add("dodecic-32015-m" + std::to_string(m), {"dyadic", "zero-one"}, "analyze",
        rhs_input(12, m, 32015),
        {{"verdict", "insoluble"}, {"fires", {"zero_one_residue@16"}}, {"oracle_count", "0"}});
  }
  for (std::uint64_t m = 2; m <= 7; ++m) {
    add("sextic-7028-m" + std::to_string(m), {"totient-power", "zero-one"}, "analyze",
        rhs_input(6, m, 7028),
        {{"verdict", "insoluble"}, {"fires", {"zero_one_residue@9"}}, {"oracle_count", "0"}});
  }
  for (std::uint64_t m = 2; m <= 3; ++m) {
    add("cubic-9005-m" + std::to_string(m), {"plus-minus"}, "analyze", rhs_input(3, m, 9005),
        {{"verdict", "insoluble"}, {"fires", {"plus_minus_residue@9"}}, {"oracle_count", "0"}});
  }
  add("sextic-pair-45399", {"even-pair", "zero-one"}, "analyze", rhs_input(6, 2, 45399),
      {{"verdict", "insoluble"}, {"theorem", "zero_one_residue"}, {"modulus", 4},
       {"family", "even_pair_mod4"}, {"oracle_count", "0"}});
  add("pentadecic-127-23607", {"gap"}, "analyze", rhs_input(15, 127, 23607),
      {{"verdict", "insoluble"}, {"theorem", "gap_interval"}});

  // Standard equations: reduce c away, then the criteria on b.
  add("standard-pair-b3-c6", {"standard", "even-pair"}, "analyze", bc_input(2, 2, 3, 6),
      {{"verdict", "insoluble"}, {"outer", "reduced_by"}, {"fires", {"zero_one_residue@4"}}});
  add("standard-pair-quartic-b19-c6", {"standard", "even-pair"}, "analyze", bc_input(4, 2, 19, 6),
      {{"verdict", "insoluble"}, {"theorem", "zero_one_residue"}, {"family", "even_pair_mod4"}});
  add("standard-pair-quartic-b11-c6", {"standard", "gap"}, "analyze", bc_input(4, 2, 11, 6),
      {{"verdict", "insoluble"}, {"theorem", "gap_interval"}});
  add("standard-dodecic-b4095-c105", {"standard", "gap"}, "analyze", bc_input(12, 4, 4095, 105),
      {{"verdict", "insoluble"}, {"theorem", "gap_interval"}});
  add("standard-dodecic-b5212-c105", {"standard", "zero-one"}, "analyze", bc_input(12, 4, 5212, 105),
      {{"verdict", "insoluble"}, {"theorem", "zero_one_residue"}, {"modulus", 13}});
  add("standard-tricenic-c154", {"standard", "plus-minus"}, "analyze",
      bc_input(30, 3, 1073743839, 154),
      {{"verdict", "insoluble"}, {"theorem", "plus_minus_residue"}, {"modulus", 25}});

  // Trivial witnesses.
  add("zero-rhs", {"trivial"}, "analyze", bc_input(2, 2, 0, 7),
      {{"verdict", "solvable"}, {"theorem", "trivial_solvable"}});
  add("small-b-witness", {"trivial"}, "analyze", bc_input(4, 3, 2, 5),
      {{"verdict", "solvable"}, {"theorem", "trivial_solvable"}, {"count", nullptr}});

  // Natural solutions.
  for (std::uint64_t p : {2, 3, 5}) {
    add("fermat-cubic-" + std::to_string(p), {"natural", "fermat"}, "analyze",
        bc_input(3, 2, 1, p, nat),
        {{"verdict", "insoluble"}, {"theorem", "prime_power_fermat"}, {"oracle_count", "0"}});
  }
  add("fermat-phi-augmented-quartic-42", {"natural", "fermat"}, "analyze", bc_input(4, 2, 1, 42, nat),
      {{"verdict", "insoluble"}, {"theorem", "phi_augmented_fermat"}, {"oracle_count", "0"}});
  add("standard-natural-bound", {"natural", "standard"}, "analyze", bc_input(4, 4, 3, 5, nat),
      {{"verdict", "insoluble"}, {"theorem", "standard_natural_bound"}, {"oracle_count", "0"}});
  add("natural-pythagorean", {"natural"}, "analyze", rhs_input(2, 2, 25, nat),
      {{"verdict", "solvable"}, {"theorem", "exhaustive_count"}, {"count", "2"}});

  // phi-divisor tables.
  add("phidiv-120", {"phidiv"}, "phidiv", phidiv_input(120),
      {{"phi_divisors", json::array({{2, 4}, {3, 2}, {5, 2}, {7, 1}, {11, 1}, {13, 1}, {31, 1}, {41, 1}, {61, 1}})}});
  add("phidiv-2", {"phidiv"}, "phidiv", phidiv_input(2),
      {{"phi_divisors", json::array({{2, 2}, {3, 1}})}});
  add("phidiv-3", {"phidiv"}, "phidiv", phidiv_input(3), {{"phi_divisors", json::array()}});
  return cs;
}

json cases_to_json(const std::vector<RegressionCase>& cases) {
  json arr = json::array();
  for (const auto& c : cases) {
    Report shell;
    shell.command = c.command;
    shell.input = c.input;
    arr.push_back({{"id", c.id},
                   {"tags", c.tags},
                   {"command", c.command},
                   {"input", to_json(shell)["input"]},
                   {"expect", c.expect}});
  }
  return arr;
}

std::vector<RegressionCase> cases_from_json(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("expectations: top level must be an array");
  std::vector<RegressionCase> out;
  try {
    for (const auto& e : j) {
      RegressionCase c;
      c.id = e.at("id").get<std::string>();
      c.tags = e.at("tags").get<std::vector<std::string>>();
      c.command = e.at("command").get<std::string>();
      if (c.command != "analyze" && c.command != "count" && c.command != "reduce" &&
          c.command != "phidiv") {
        throw std::invalid_argument("expectations: unknown command '" + c.command + "' in " + c.id);
      }
      // Reuse the report parser for the input block.
      json shell = {{"command", c.command}, {"input", e.at("input")}, {"verdict", nullptr},
                    {"certificate", nullptr}, {"count", nullptr}, {"trace", nullptr},
                    {"phi_divisors", json::array()}, {"solutions", json::array()},
                    {"elapsed_ms", 0}};
      c.input = report_from_json(shell).input;
      c.expect = e.at("expect");
      if (!c.expect.is_object()) throw std::invalid_argument("expectations: 'expect' must be an object");
      out.push_back(std::move(c));
    }
  } catch (const json::exception& ex) {
    throw std::invalid_argument(std::string("expectations: ") + ex.what());
  }
  return out;
}

bool matches_filter(const RegressionCase& c, std::string_view filter) {
  if (filter.empty() || c.id.find(filter) != std::string::npos) return true;
  for (const auto& t : c.tags) {
    if (t.find(filter) != std::string::npos) return true;
  }
  return false;
}

CaseResult run_case(const RegressionCase& c, const AnalysisOptions& options) {
  const auto t0 = std::chrono::steady_clock::now();
  CaseResult res{c.id, false, "", 0};
  try {
    Report r;
    if (c.command == "analyze") {
      r = run_analyze(c.input, options);
    } else if (c.command == "count") {
      r = run_count(c.input, options.oracle);
    } else if (c.command == "reduce") {
      r = run_reduce(c.input);
    } else if (c.command == "phidiv") {
      r = run_phidiv(c.input.n);
    } else {
      throw std::invalid_argument("unknown command '" + c.command + "'");
    }
    check(c, r, options);
    res.passed = true;
    if (r.verdict) {
      res.detail = std::string(to_string(r.verdict->outcome));
      if (r.verdict->certificate) res.detail += " via " + std::string(r.verdict->certificate->innermost().name());
    } else if (r.count) {
      res.detail = "count " + r.count->str();
    } else if (r.trace) {
      res.detail = "reduced to " + r.trace->coefficient.reduced.str();
    } else {
      res.detail = std::to_string(r.phi_divisors.size()) + " phi-divisors";
    }
  } catch (const Mismatch& m) {
    res.detail = m.what;
  } catch (const std::exception& ex) {
    res.detail = std::string("error: ") + ex.what();
  }
  res.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return res;
}

} // namespace powersum
