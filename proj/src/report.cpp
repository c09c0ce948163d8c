#include "powersum/report.hpp"

#include <sstream>
#include <stdexcept>

namespace powersum {

using nlohmann::json;

namespace {

json big(const BigInt& v) { return v.str(); }

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw std::invalid_argument(std::string("report: missing field '") + key + "'");
  }
  return j.at(key);
}

BigInt get_big(const json& j, const char* key) {
  const json& v = field(j, key);
  if (!v.is_string()) throw std::invalid_argument(std::string("report: '") + key + "' must be a string");
  return parse_decimal(v.get<std::string>());
}

std::optional<BigInt> get_opt_big(const json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return get_big(j, key);
}

template <class T>
T get_num(const json& j, const char* key) {
  const json& v = field(j, key);
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<std::int64_t>() >= 0)) {
    throw std::invalid_argument(std::string("report: '") + key + "' must be a non-negative integer");
  }
  return v.get<T>();
}

std::string get_str(const json& j, const char* key) {
  const json& v = field(j, key);
  if (!v.is_string()) throw std::invalid_argument(std::string("report: '") + key + "' must be a string");
  return v.get<std::string>();
}

Mode mode_from(const std::string& s) {
  if (s == "natural") return Mode::Natural;
  if (s == "non-negative") return Mode::NonNegative;
  throw std::invalid_argument("report: unknown mode '" + s + "'");
}

Outcome outcome_from(const std::string& s) {
  if (s == "solvable") return Outcome::Solvable;
  if (s == "insoluble") return Outcome::Insoluble;
  if (s == "unknown") return Outcome::Unknown;
  throw std::invalid_argument("report: unknown verdict '" + s + "'");
}

ZeroOneFamily family_from(const std::string& s) {
  for (auto f : {ZeroOneFamily::Generic, ZeroOneFamily::TotientPower, ZeroOneFamily::EvenPairMod4,
                 ZeroOneFamily::DyadicPower}) {
    if (family_name(f) == s) return f;
  }
  throw std::invalid_argument("report: unknown residue family '" + s + "'");
}

json to_json(const PhiDivisor& pd) {
  return {{"prime", pd.prime}, {"degree", pd.degree}, {"prime_power", pd.prime_power}};
}

PhiDivisor phi_divisor_from(const json& j) {
  return {get_num<std::uint64_t>(j, "prime"), get_num<unsigned>(j, "degree"),
          get_num<std::uint64_t>(j, "prime_power")};
}

json to_json(const std::vector<StrippedFactor>& factors) {
  json arr = json::array();
  for (const auto& f : factors) {
    json e = to_json(f.divisor);
    e["multiplicity"] = f.multiplicity;
    arr.push_back(std::move(e));
  }
  return arr;
}

std::vector<StrippedFactor> stripped_from(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("report: stripped factors must be an array");
  std::vector<StrippedFactor> out;
  for (const auto& e : j) out.push_back({phi_divisor_from(e), get_num<std::uint64_t>(e, "multiplicity")});
  return out;
}

std::string power_text(const BigInt& base, const BigInt& exp) {
  return base.str() + "^" + exp.str();
}

std::string stripped_text(const std::vector<StrippedFactor>& factors, std::uint64_t n) {
  std::string out;
  for (const auto& f : factors) {
    if (!out.empty()) out += ", ";
    out += std::to_string(f.divisor.prime) + "^" + std::to_string(n) + " x" +
           std::to_string(f.multiplicity);
  }
  return out.empty() ? "nothing" : out;
}

std::string prime_powers_text(const std::vector<StrippedFactor>& factors) {
  std::string out;
  for (const auto& f : factors) {
    if (!out.empty()) out += " * ";
    out += std::to_string(f.divisor.prime) + "^" + std::to_string(f.multiplicity);
  }
  return out.empty() ? "1" : out;
}

std::string equation_text(const Equation& eq) {
  std::string s = "sum_{i=1.." + std::to_string(eq.m()) + "} x_i^" + std::to_string(eq.n()) +
                  " = " + eq.b().str();
  if (eq.c() != 1) s += " * " + power_text(eq.c(), eq.n());
  s += " (" + std::string(to_string(eq.mode())) + ")";
  return s;
}

} // namespace

json to_json(const Equation& eq) {
  return {{"n", eq.n()}, {"m", eq.m()}, {"b", big(eq.b())}, {"c", big(eq.c())},
          {"mode", to_string(eq.mode())}};
}

Equation equation_from_json(const json& j) {
  return Equation(get_num<std::uint64_t>(j, "n"), get_num<std::uint64_t>(j, "m"), get_big(j, "b"),
                  get_big(j, "c"), mode_from(get_str(j, "mode")));
}

json to_json(const Reduction& red) {
  return {{"original", to_json(red.equation.original)},
          {"reduced", to_json(red.equation.reduced)},
          {"stripped", to_json(red.equation.stripped)},
          {"coefficient",
           {{"original", big(red.coefficient.original)},
            {"reduced", big(red.coefficient.reduced)},
            {"stripped", to_json(red.coefficient.stripped)}}},
          {"result", to_json(red.result())}};
}

Reduction reduction_from_json(const json& j) {
  const json& co = field(j, "coefficient");
  return {ReductionTrace{equation_from_json(field(j, "original")),
                         equation_from_json(field(j, "reduced")),
                         stripped_from(field(j, "stripped"))},
          RhsReduction{get_big(co, "original"), get_big(co, "reduced"),
                       stripped_from(field(co, "stripped"))}};
}

json to_json(const Certificate& cert) {
  json out = {{"theorem", cert.name()}};
  struct Visitor {
    json& out;
    void operator()(const TrivialSolvable& c) const {
      out["params"] = {{"copies", big(c.copies)}, {"value", big(c.value)}};
    }
    void operator()(const GapInterval& c) const { out["params"] = {{"l", big(c.l)}}; }
    void operator()(const ResidueZeroOne& c) const {
      out["params"] = {{"modulus", c.modulus}, {"remainder", c.remainder},
                       {"family", family_name(c.family)}};
    }
    void operator()(const ResiduePlusMinus& c) const {
      out["params"] = {{"prime", c.prime}, {"exponent", c.exponent}, {"modulus", c.modulus},
                       {"remainder", c.remainder}};
    }
    void operator()(const GeneralResidue& c) const {
      out["params"] = {{"modulus", c.modulus}, {"remainder", c.remainder},
                       {"attainable", c.attainable}};
    }
    void operator()(const StandardNaturalBound& c) const {
      out["params"] = {{"b", big(c.b)}, {"m", c.m}};
    }
    void operator()(const PrimePowerFermat& c) const {
      out["params"] = {{"prime", c.prime}, {"s", c.s}, {"n", c.n}};
    }
    void operator()(const PhiAugmentedFermat& c) const {
      out["params"] = {{"prime", c.prime}, {"s", c.s}, {"stripped", to_json(c.stripped)}};
    }
    void operator()(const ExhaustiveCount& c) const {
      out["params"] = {{"rhs", big(c.rhs)}, {"mode", to_string(c.mode)}, {"count", big(c.count)}};
    }
    void operator()(const ReducedBy& c) const {
      out["params"] = {{"reduction", to_json(c.reduction)}};
      out["inner"] = to_json(*c.inner);
    }
  };
  std::visit(Visitor{out}, cert.value);
  return out;
}

Certificate certificate_from_json(const json& j) {
  const std::string name = get_str(j, "theorem");
  const json& p = field(j, "params");
  if (name == "trivial_solvable") return {TrivialSolvable{get_big(p, "copies"), get_big(p, "value")}};
  if (name == "gap_interval") return {GapInterval{get_big(p, "l")}};
  if (name == "zero_one_residue") {
    return {ResidueZeroOne{get_num<std::uint64_t>(p, "modulus"), get_num<std::uint64_t>(p, "remainder"),
                           family_from(get_str(p, "family"))}};
  }
  if (name == "plus_minus_residue") {
    return {ResiduePlusMinus{get_num<std::uint64_t>(p, "prime"), get_num<unsigned>(p, "exponent"),
                             get_num<std::uint64_t>(p, "modulus"),
                             get_num<std::uint64_t>(p, "remainder")}};
  }
  if (name == "general_residue") {
    return {GeneralResidue{get_num<std::uint64_t>(p, "modulus"), get_num<std::uint64_t>(p, "remainder"),
                           get_num<std::uint64_t>(p, "attainable")}};
  }
  if (name == "standard_natural_bound") {
    return {StandardNaturalBound{get_big(p, "b"), get_num<std::uint64_t>(p, "m")}};
  }
  if (name == "prime_power_fermat") {
    return {PrimePowerFermat{get_num<std::uint64_t>(p, "prime"), get_num<std::uint64_t>(p, "s"),
                             get_num<std::uint64_t>(p, "n")}};
  }
  if (name == "phi_augmented_fermat") {
    return {PhiAugmentedFermat{get_num<std::uint64_t>(p, "prime"), get_num<std::uint64_t>(p, "s"),
                               stripped_from(field(p, "stripped"))}};
  }
  if (name == "exhaustive_count") {
    return {ExhaustiveCount{get_big(p, "rhs"), mode_from(get_str(p, "mode")), get_big(p, "count")}};
  }
  if (name == "reduced_by") {
    return {ReducedBy{reduction_from_json(field(p, "reduction")),
                      std::make_shared<const Certificate>(certificate_from_json(field(j, "inner")))}};
  }
  throw std::invalid_argument("report: unknown certificate '" + name + "'");
}

json to_json(const Report& r) {
  json input = {{"n", r.input.n}, {"m", r.input.m}, {"mode", to_string(r.input.mode)}};
  input["b"] = r.input.b ? big(*r.input.b) : json(nullptr);
  input["c"] = r.input.c ? big(*r.input.c) : json(nullptr);
  input["rhs"] = r.input.rhs ? big(*r.input.rhs) : json(nullptr);

  json out = {{"command", r.command}, {"input", std::move(input)}};
  out["verdict"] = r.verdict ? json(to_string(r.verdict->outcome)) : json(nullptr);
  out["certificate"] =
      r.verdict && r.verdict->certificate ? to_json(*r.verdict->certificate) : json(nullptr);
  const std::optional<BigInt>& count = r.verdict ? r.verdict->count : r.count;
  out["count"] = count ? big(*count) : json(nullptr);
  out["trace"] = r.trace ? to_json(*r.trace) : json(nullptr);
  json pds = json::array();
  for (const auto& pd : r.phi_divisors) pds.push_back(to_json(pd));
  out["phi_divisors"] = std::move(pds);
  out["solutions"] = r.solutions;
  out["elapsed_ms"] = r.elapsed_ms;
  return out;
}

Report report_from_json(const json& j) {
  Report r;
  r.command = get_str(j, "command");
  const json& in = field(j, "input");
  r.input.n = get_num<std::uint64_t>(in, "n");
  r.input.m = get_num<std::uint64_t>(in, "m");
  r.input.b = get_opt_big(in, "b");
  r.input.c = get_opt_big(in, "c");
  r.input.rhs = get_opt_big(in, "rhs");
  r.input.mode = mode_from(get_str(in, "mode"));

  const std::optional<BigInt> count = get_opt_big(j, "count");
  const json& verdict = field(j, "verdict");
  if (!verdict.is_null()) {
    Verdict v;
    v.outcome = outcome_from(verdict.get<std::string>());
    const json& cert = field(j, "certificate");
    if (!cert.is_null()) v.certificate = certificate_from_json(cert);
    v.count = count;
    r.verdict = std::move(v);
  } else {
    r.count = count;
  }
  const json& trace = field(j, "trace");
  if (!trace.is_null()) r.trace = reduction_from_json(trace);
  for (const auto& pd : field(j, "phi_divisors")) r.phi_divisors.push_back(phi_divisor_from(pd));
  r.solutions = field(j, "solutions").get<std::vector<std::vector<std::uint64_t>>>();
  const json& ms = field(j, "elapsed_ms");
  if (!ms.is_number()) throw std::invalid_argument("report: 'elapsed_ms' must be a number");
  r.elapsed_ms = ms.get<double>();
  return r;
}

std::string serialize(const Report& report) { return to_json(report).dump(); }

Report parse_report(const std::string& line) {
  json j;
  try {
    j = json::parse(line);
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("report: malformed JSON: ") + e.what());
  }
  try {
    return report_from_json(j);
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("report: ") + e.what());
  }
}

std::string describe(const Certificate& cert, std::uint64_t n, std::uint64_t m) {
  const std::string ns = std::to_string(n);
  const std::string ms = std::to_string(m);
  struct Visitor {
    const std::string& ns;
    const std::string& ms;
    std::uint64_t n;
    std::uint64_t m;
    std::string operator()(const TrivialSolvable& c) const {
      if (c.copies == 0) return "solvable: all terms zero";
      return "solvable: " + c.copies.str() + " terms equal to " + c.value.str() +
             ", the rest zero";
    }
    std::string operator()(const GapInterval& c) const {
      const BigInt l1 = c.l + 1;
      return "gap interval: no sum of " + ms + " powers x^" + ns + " lies in [" + ms + "*" +
             power_text(c.l, n) + "+1, " + power_text(l1, n) + "-1] (l = " + c.l.str() + ")";
    }
    std::string operator()(const ResidueZeroOne& c) const {
      return "zero-one residue (" + std::string(family_name(c.family)) + "): x^" + ns +
             " is 0 or 1 mod " + std::to_string(c.modulus) + ", so " + ms +
             " terms reach only 0.." + ms + ", but the right-hand side is " +
             std::to_string(c.remainder) + " mod " + std::to_string(c.modulus);
    }
    std::string operator()(const ResiduePlusMinus& c) const {
      return "plus-minus residue: x^" + ns + " is 0 or +-1 mod " + std::to_string(c.prime) + "^" +
             std::to_string(c.exponent) + " = " + std::to_string(c.modulus) + ", so " + ms +
             " terms reach only -" + ms + ".." + ms + ", but the right-hand side is " +
             std::to_string(c.remainder) + " mod " + std::to_string(c.modulus);
    }
    std::string operator()(const GeneralResidue& c) const {
      return "residue sumset: the right-hand side is " + std::to_string(c.remainder) + " mod " +
             std::to_string(c.modulus) + ", outside the " + std::to_string(c.attainable) +
             " residues reachable by " + ms + " powers x^" + ns;
    }
    std::string operator()(const StandardNaturalBound& c) const {
      return "standard equation with b = " + c.b.str() + " < m = " + std::to_string(c.m) +
             ": no solution in positive integers";
    }
    std::string operator()(const PrimePowerFermat& c) const {
      return "x^" + std::to_string(c.n) + " + y^" + std::to_string(c.n) + " = (" +
             std::to_string(c.prime) + "^" + std::to_string(c.s) + ")^" + std::to_string(c.n) +
             " has no solution in positive integers";
    }
    std::string operator()(const PhiAugmentedFermat& c) const {
      std::string base = c.s == 0 ? "1" : std::to_string(c.prime) + "^" + std::to_string(c.s);
      return "x^" + ns + " + y^" + ns + " with x, y >= 1 cannot equal the power " + ns + " of " + base +
             " * " + prime_powers_text(c.stripped) + ", the second factor built from phi-divisors";
    }
    std::string operator()(const ExhaustiveCount& c) const {
      return "exhaustive count: " + c.count.str() + " " + std::string(to_string(c.mode)) +
             " solutions with right-hand side " + c.rhs.str();
    }
    std::string operator()(const ReducedBy& c) const {
      const Equation res = c.reduction.result();
      return "reduced to " + equation_text(res) + "; then " + describe(*c.inner, n, m);
    }
  };
  return std::visit(Visitor{ns, ms, n, m}, cert.value);
}

std::string render_text(const Report& r) {
  std::ostringstream os;
  os << r.command << ": n = " << r.input.n;
  if (r.command != "phidiv") {
    os << ", m = " << r.input.m;
    if (r.input.rhs) os << ", rhs = " << *r.input.rhs;
    if (r.input.b) os << ", b = " << *r.input.b;
    if (r.input.c) os << ", c = " << *r.input.c;
    os << ", " << to_string(r.input.mode);
  }
  os << '\n';
  if (r.trace) {
    const Reduction& t = *r.trace;
    const std::uint64_t n = t.equation.original.n();
    if (t.equation.changed()) {
      os << "  c: " << t.equation.original.c() << " -> " << t.equation.reduced.c() << ", removed "
         << prime_powers_text(t.equation.stripped) << '\n';
    }
    os << "  b: " << t.coefficient.original << " -> " << t.coefficient.reduced;
    if (t.coefficient.changed()) os << ", removed " << stripped_text(t.coefficient.stripped, n);
    os << '\n';
    os << "  reduced: " << equation_text(t.result()) << '\n';
  }
  if (!r.phi_divisors.empty() || r.command == "phidiv") {
    os << "  phi-divisors:";
    if (r.phi_divisors.empty()) os << " none";
    for (const auto& pd : r.phi_divisors) os << " (" << pd.prime << ", " << pd.degree << ")";
    os << '\n';
  }
  if (r.verdict) {
    os << "  verdict: " << to_string(r.verdict->outcome) << '\n';
    if (r.verdict->certificate) {
      os << "  certificate: " << describe(*r.verdict->certificate, r.input.n, r.input.m) << '\n';
    }
  }
  const std::optional<BigInt>& count = r.verdict ? r.verdict->count : r.count;
  if (count) os << "  count: " << *count << '\n';
  for (const auto& t : r.solutions) {
    os << "   ";
    for (auto x : t) os << ' ' << x;
    os << '\n';
  }
  os << "  elapsed: " << r.elapsed_ms << " ms\n";
  return os.str();
}

} // namespace powersum
