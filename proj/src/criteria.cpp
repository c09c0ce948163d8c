#include "powersum/criteria.hpp"

#include <algorithm>
#include <stdexcept>

#include "powersum/numtheory.hpp"
#include "powersum/phidiv.hpp"

namespace powersum {

namespace mp = boost::multiprecision;

namespace {

std::uint64_t mod_u64(const BigInt& value, std::uint64_t modulus) {
  return static_cast<BigInt>(value % modulus).convert_to<std::uint64_t>();
}

BigInt pow_big(const BigInt& base, std::uint64_t exp) {
  return mp::pow(base, static_cast<unsigned>(exp));
}

std::uint64_t pow_u64(std::uint64_t p, unsigned k) {
  std::uint64_t v = 1;
  for (unsigned i = 0; i < k; ++i) v *= p;
  return v;
}

Certificate wrap(const Reduction& red, Certificate inner) {
  if (!red.changed()) return inner;
  return Certificate{ReducedBy{red, std::make_shared<const Certificate>(std::move(inner))}};
}

ZeroOneFamily classify_zero_one(std::uint64_t n, std::uint64_t m, std::uint64_t c) {
  if (c == 4 && m == 2 && n % 2 == 0) return ZeroOneFamily::EvenPairMod4;
  if (auto pp = as_prime_power(c)) {
    if (euler_phi_prime_power(pp->prime, pp->exponent) <= n &&
        n % euler_phi_prime_power(pp->prime, pp->exponent) == 0) {
      return ZeroOneFamily::TotientPower;
    }
    if (pp->prime == 2 && pp->exponent >= 4 && n % pow_u64(2, pp->exponent - 2) == 0) {
      return ZeroOneFamily::DyadicPower;
    }
  }
  return ZeroOneFamily::Generic;
}

// Whether h = phi(p^k)/2 divides n with an odd quotient.
bool plus_minus_exponent_ok(std::uint64_t n, std::uint64_t p, unsigned k) {
  const BigInt phi = euler_phi_prime_power(p, k);
  if (phi > BigInt(n) * 2) return false;
  const std::uint64_t h = phi.convert_to<std::uint64_t>() / 2;
  return n % h == 0 && (n / h) % 2 == 1;
}

bool plus_minus_fires(std::uint64_t m, std::uint64_t modulus, std::uint64_t r) {
  return 2 * m < modulus - 1 && r >= m + 1 && r <= modulus - m - 1;
}

std::size_t count_true(const std::vector<bool>& bits) {
  return static_cast<std::size_t>(std::count(bits.begin(), bits.end(), true));
}

} // namespace

bool operator==(const ReducedBy& a, const ReducedBy& b) {
  if (!(a.reduction == b.reduction)) return false;
  if (!a.inner || !b.inner) return a.inner == b.inner;
  return *a.inner == *b.inner;
}

std::string_view Certificate::name() const {
  struct Visitor {
    std::string_view operator()(const TrivialSolvable&) const { return "trivial_solvable"; }
    std::string_view operator()(const GapInterval&) const { return "gap_interval"; }
    std::string_view operator()(const ResidueZeroOne&) const { return "zero_one_residue"; }
    std::string_view operator()(const ResiduePlusMinus&) const { return "plus_minus_residue"; }
    std::string_view operator()(const GeneralResidue&) const { return "general_residue"; }
    std::string_view operator()(const StandardNaturalBound&) const { return "standard_natural_bound"; }
    std::string_view operator()(const PrimePowerFermat&) const { return "prime_power_fermat"; }
    std::string_view operator()(const PhiAugmentedFermat&) const { return "phi_augmented_fermat"; }
    std::string_view operator()(const ExhaustiveCount&) const { return "exhaustive_count"; }
    std::string_view operator()(const ReducedBy&) const { return "reduced_by"; }
  };
  return std::visit(Visitor{}, value);
}

const Certificate& Certificate::innermost() const {
  const Certificate* cur = this;
  while (const auto* r = std::get_if<ReducedBy>(&cur->value)) cur = r->inner.get();
  return *cur;
}

std::string_view family_name(ZeroOneFamily family) {
  switch (family) {
  case ZeroOneFamily::Generic: return "generic";
  case ZeroOneFamily::TotientPower: return "totient_power";
  case ZeroOneFamily::EvenPairMod4: return "even_pair_mod4";
  case ZeroOneFamily::DyadicPower: return "dyadic_power";
  }
  return "generic";
}

std::string_view to_string(Outcome outcome) {
  switch (outcome) {
  case Outcome::Solvable: return "solvable";
  case Outcome::Insoluble: return "insoluble";
  case Outcome::Unknown: return "unknown";
  }
  return "unknown";
}

// ---------------------------------------------------------------------------
// Criteria

std::optional<Certificate> check_gap(std::uint64_t n, std::uint64_t m, const BigInt& b) {
  if (b <= m) throw std::invalid_argument("check_gap: requires b > m");
  // b <= (l+1)^n - 1 and b >= m l^n + 1 >= l^n + 1 force l = floor(b^(1/n)),
  // so there is exactly one candidate l.
  const BigInt l = integer_nth_root(b, static_cast<unsigned>(n));
  if (l == 0) return std::nullopt;
  const BigInt ln = pow_big(l, n);
  const BigInt next = pow_big(l + 1, n);
  if ((m + 1) * ln < next && b >= m * ln + 1 && b <= next - 1) {
    return Certificate{GapInterval{l}};
  }
  return std::nullopt;
}

std::optional<Certificate> check_zero_one_residue(std::uint64_t n, std::uint64_t m,
                                                  const BigInt& b, std::uint64_t c) {
  if (c < 2) throw std::invalid_argument("check_zero_one_residue: modulus must be at least 2");
  if (!power_residues(n, c).subset_of({0, 1})) {
    throw std::invalid_argument("check_zero_one_residue: n-th powers are not all 0 or 1 mod " +
                                std::to_string(c));
  }
  const std::uint64_t r = mod_u64(b, c);
  if (m < c - 1 && r > m) {
    return Certificate{ResidueZeroOne{c, r, classify_zero_one(n, m, c)}};
  }
  return std::nullopt;
}

std::vector<ZeroOneModulus> candidate_zero_one_moduli(std::uint64_t n, std::uint64_t m) {
  std::vector<ZeroOneModulus> out;
  for (std::uint64_t d : divisors(n)) {
    const std::uint64_t p = d + 1;
    if (!is_prime(p)) continue;
    for (unsigned k = 1;; ++k) {
      const BigInt phi = euler_phi_prime_power(p, k);
      if (phi > n || n % phi != 0) break;
      const std::uint64_t pk = pow_u64(p, k);
      if (pk >= 3 && m < pk - 1) out.push_back({pk, classify_zero_one(n, m, pk)});
    }
  }
  for (unsigned k = 2; k < 62 && n % pow_u64(2, k) == 0; ++k) {
    const std::uint64_t modulus = pow_u64(2, k + 2);
    if (m >= modulus - 1) continue;
    bool present = std::any_of(out.begin(), out.end(),
                               [&](const ZeroOneModulus& z) { return z.modulus == modulus; });
    if (!present) out.push_back({modulus, ZeroOneFamily::DyadicPower});
  }
  std::sort(out.begin(), out.end(),
            [](const ZeroOneModulus& a, const ZeroOneModulus& b) { return a.modulus < b.modulus; });
  return out;
}

std::optional<Certificate> check_plus_minus_residue(std::uint64_t n, std::uint64_t m,
                                                    const BigInt& b, std::uint64_t p,
                                                    unsigned k) {
  if (p < 3 || !is_prime(p)) throw std::invalid_argument("check_plus_minus_residue: p must be an odd prime");
  if (k == 0) throw std::invalid_argument("check_plus_minus_residue: k must be positive");
  if (!plus_minus_exponent_ok(n, p, k)) {
    throw std::invalid_argument("check_plus_minus_residue: n is not an odd multiple of phi(p^k)/2");
  }
  const std::uint64_t modulus = pow_u64(p, k);
  const std::uint64_t r = mod_u64(b, modulus);
  if (plus_minus_fires(m, modulus, r)) {
    return Certificate{ResiduePlusMinus{p, k, modulus, r}};
  }
  return std::nullopt;
}

std::vector<PlusMinusModulus> candidate_plus_minus_moduli(std::uint64_t n, std::uint64_t m) {
  std::vector<PlusMinusModulus> out;
  for (std::uint64_t d : divisors(2 * n)) {
    const std::uint64_t p = d + 1;
    if (p < 3 || !is_prime(p)) continue;
    for (unsigned k = 1;; ++k) {
      const BigInt phi = euler_phi_prime_power(p, k);
      if (phi > 2 * BigInt(n) || (2 * BigInt(n)) % phi != 0) break;
      const std::uint64_t pk = pow_u64(p, k);
      if (plus_minus_exponent_ok(n, p, k) && 2 * m < pk - 1) out.push_back({p, k, pk});
    }
  }
  std::sort(out.begin(), out.end(), [](const PlusMinusModulus& a, const PlusMinusModulus& b) {
    return a.modulus < b.modulus;
  });
  return out;
}

std::vector<bool> attainable_residues(std::uint64_t n, std::uint64_t m, std::uint64_t c) {
  const ResidueSet powers = power_residues(n, c);
  std::vector<bool> reached(c, false);
  reached[0] = true;
  // 0 is an n-th power residue, so the reachable sets grow monotonically in
  // the number of terms and the iteration can stop once it stabilises.
  for (std::uint64_t step = 0; step < m; ++step) {
    std::vector<bool> next = reached;
    bool grew = false;
    for (std::uint64_t a = 0; a < c; ++a) {
      if (!reached[a]) continue;
      for (std::uint64_t r : powers.residues()) {
        const std::uint64_t s = (a + r) % c;
        if (!next[s]) {
          next[s] = true;
          grew = true;
        }
      }
    }
    if (!grew) break;
    reached = std::move(next);
  }
  return reached;
}

std::optional<Certificate> check_general_residue(std::uint64_t n, std::uint64_t m,
                                                 const BigInt& b, std::uint64_t c) {
  if (c < 2) throw std::invalid_argument("check_general_residue: modulus must be at least 2");
  const auto reached = attainable_residues(n, m, c);
  const std::uint64_t r = mod_u64(b, c);
  if (reached[r]) return std::nullopt;
  return Certificate{GeneralResidue{c, r, count_true(reached)}};
}

std::vector<std::uint64_t> candidate_general_moduli(std::uint64_t n, std::uint64_t cap) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d : divisors(2 * n)) {
    const std::uint64_t p = d + 1;
    if (!is_prime(p)) continue;
    for (std::uint64_t pk = p; pk <= cap; pk *= p) {
      out.push_back(pk);
      if (pk > cap / p) break;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// Certificate checking

bool verify_certificate(const Certificate& cert, const Equation& eq) {
  const std::uint64_t n = eq.n();
  const std::uint64_t m = eq.m();
  const BigInt target = eq.rhs();

  struct Visitor {
    const Equation& eq;
    std::uint64_t n, m;
    const BigInt& target;

    bool operator()(const TrivialSolvable& t) const {
      if (t.copies < 0 || t.copies > m || t.value < 0) return false;
      return t.copies * pow_big(t.value, n) == target;
    }
    bool operator()(const GapInterval& g) const {
      if (g.l < 1) return false;
      const BigInt ln = pow_big(g.l, n);
      const BigInt next = pow_big(g.l + 1, n);
      return (m + 1) * ln < next && target >= m * ln + 1 && target <= next - 1;
    }
    bool operator()(const ResidueZeroOne& z) const {
      if (z.modulus < 2 || !power_residues(n, z.modulus).subset_of({0, 1})) return false;
      return m < z.modulus - 1 && mod_u64(target, z.modulus) == z.remainder && z.remainder > m &&
             classify_zero_one(n, m, z.modulus) == z.family;
    }
    bool operator()(const ResiduePlusMinus& pm) const {
      if (pm.prime < 3 || !is_prime(pm.prime) || pm.exponent == 0) return false;
      if (pow_u64(pm.prime, pm.exponent) != pm.modulus) return false;
      if (!plus_minus_exponent_ok(n, pm.prime, pm.exponent)) return false;
      if (!power_residues(n, pm.modulus).subset_of({0, 1, -1})) return false;
      return mod_u64(target, pm.modulus) == pm.remainder &&
             plus_minus_fires(m, pm.modulus, pm.remainder);
    }
    bool operator()(const GeneralResidue& g) const {
      if (g.modulus < 2) return false;
      const auto reached = attainable_residues(n, m, g.modulus);
      return mod_u64(target, g.modulus) == g.remainder && !reached[g.remainder] &&
             count_true(reached) == g.attainable;
    }
    bool operator()(const StandardNaturalBound& s) const {
      return eq.mode() == Mode::Natural && is_standard(eq) && s.b == eq.b() && s.m == m && s.b < m;
    }
    bool operator()(const PrimePowerFermat& f) const {
      return eq.mode() == Mode::Natural && m == 2 && n >= 3 && f.n == n && eq.b() == 1 &&
             f.s >= 1 && is_prime(f.prime) && eq.c() == pow_big(BigInt(f.prime), f.s);
    }
    bool operator()(const PhiAugmentedFermat& f) const {
      if (eq.mode() != Mode::Natural || m != 2 || n < 4 || n % 2 != 0 || eq.b() != 1) return false;
      BigInt c = 1;
      if (f.s > 0) {
        if (!is_prime(f.prime)) return false;
        c = pow_big(BigInt(f.prime), f.s);
      } else if (f.prime != 0) {
        return false;
      }
      for (const auto& sf : f.stripped) {
        if (phi_divisor(sf.divisor.prime, n) != sf.divisor) return false;
        c *= pow_big(BigInt(sf.divisor.prime), sf.multiplicity);
      }
      return c == eq.c();
    }
    bool operator()(const ExhaustiveCount& e) const {
      if (e.rhs != target || e.mode != eq.mode()) return false;
      return count_solutions(n, m, e.rhs, e.mode).count == e.count;
    }
    bool operator()(const ReducedBy& r) const {
      if (!r.inner || !(r.reduction == reduce(eq))) return false;
      return verify_certificate(*r.inner, r.reduction.result());
    }
  };
  return std::visit(Visitor{eq, n, m, target}, cert.value);
}

// ---------------------------------------------------------------------------
// Dispatcher

Analyzer::Analyzer(std::uint64_t n, std::uint64_t m, AnalysisOptions options)
    : n_(n), m_(m), options_(options) {
  if (n < 2 || n > max_exponent) throw std::invalid_argument("analyzer: exponent out of range");
  if (m < 2) throw std::invalid_argument("analyzer: m must be at least 2");
  zero_one_ = candidate_zero_one_moduli(n, m);
  plus_minus_ = candidate_plus_minus_moduli(n, m);
  general_ = candidate_general_moduli(n, options_.modulus_cap);
  general_sets_.reserve(general_.size());
  for (std::uint64_t c : general_) general_sets_.push_back(attainable_residues(n, m, c));
}

std::vector<Certificate> Analyzer::all_certificates(const BigInt& target) const {
  if (target <= m_) throw std::invalid_argument("analyzer: criteria require target > m");
  std::vector<Certificate> out;
  if (auto gap = check_gap(n_, m_, target)) out.push_back(std::move(*gap));
  for (const auto& z : zero_one_) {
    const std::uint64_t r = mod_u64(target, z.modulus);
    if (r > m_) out.push_back(Certificate{ResidueZeroOne{z.modulus, r, z.family}});
  }
  for (const auto& pm : plus_minus_) {
    const std::uint64_t r = mod_u64(target, pm.modulus);
    if (plus_minus_fires(m_, pm.modulus, r)) {
      out.push_back(Certificate{ResiduePlusMinus{pm.prime, pm.exponent, pm.modulus, r}});
    }
  }
  for (std::size_t i = 0; i < general_.size(); ++i) {
    const std::uint64_t r = mod_u64(target, general_[i]);
    if (!general_sets_[i][r]) {
      out.push_back(Certificate{GeneralResidue{general_[i], r, count_true(general_sets_[i])}});
    }
  }
  return out;
}

std::optional<Certificate> Analyzer::certify(const BigInt& target) const {
  if (target <= m_) throw std::invalid_argument("analyzer: criteria require target > m");
  if (auto gap = check_gap(n_, m_, target)) return gap;
  for (const auto& z : zero_one_) {
    const std::uint64_t r = mod_u64(target, z.modulus);
    if (r > m_) return Certificate{ResidueZeroOne{z.modulus, r, z.family}};
  }
  for (const auto& pm : plus_minus_) {
    const std::uint64_t r = mod_u64(target, pm.modulus);
    if (plus_minus_fires(m_, pm.modulus, r)) {
      return Certificate{ResiduePlusMinus{pm.prime, pm.exponent, pm.modulus, r}};
    }
  }
  for (std::size_t i = 0; i < general_.size(); ++i) {
    const std::uint64_t r = mod_u64(target, general_[i]);
    if (!general_sets_[i][r]) {
      return Certificate{GeneralResidue{general_[i], r, count_true(general_sets_[i])}};
    }
  }
  return std::nullopt;
}

Verdict Analyzer::count_verdict(const Reduction& red, Mode mode) const {
  const Equation reduced = red.result();
  const BigInt target = reduced.rhs();
  if (!options_.use_oracle || !within_budget(n_, m_, target, mode, options_.oracle)) {
    return {Outcome::Unknown, std::nullopt, std::nullopt};
  }
  const BigInt count = count_solutions(n_, m_, target, mode, options_.oracle).count;
  Verdict v;
  v.outcome = count == 0 ? Outcome::Insoluble : Outcome::Solvable;
  v.certificate = wrap(red, Certificate{ExhaustiveCount{target, mode, count}});
  v.count = count;
  return v;
}

Verdict Analyzer::analyze(const Equation& eq) const {
  if (eq.n() != n_ || eq.m() != m_) throw std::invalid_argument("analyzer: equation has a different (n, m)");
  if (eq.mode() == Mode::Natural) return analyze_natural(eq);

  const Reduction red = reduce(eq);
  const Equation reduced = red.result();
  if (reduced.b() <= m_) {
    return {Outcome::Solvable, Certificate{TrivialSolvable{reduced.b(), red.witness_base()}},
            std::nullopt};
  }
  if (auto cert = certify(reduced.rhs())) {
    return {Outcome::Insoluble, wrap(red, std::move(*cert)), std::nullopt};
  }
  return count_verdict(red, Mode::NonNegative);
}

std::optional<Certificate> Analyzer::natural_special_cases(const Equation& eq) const {
  if (m_ == 2 && eq.b() == 1 && eq.c() > 1) {
    const auto f = factorize(eq.c());
    if (n_ >= 3 && f.factors.size() == 1) {
      return Certificate{PrimePowerFermat{f.factors[0].prime, f.factors[0].exponent, n_}};
    }
    if (n_ >= 4 && n_ % 2 == 0) {
      PhiAugmentedFermat aug;
      std::size_t others = 0;
      for (const auto& pf : f.factors) {
        if (auto pd = phi_divisor(pf.prime, n_)) {
          aug.stripped.push_back({*pd, pf.exponent});
        } else {
          aug.prime = pf.prime;
          aug.s = pf.exponent;
          ++others;
        }
      }
      if (others <= 1) return Certificate{std::move(aug)};
    }
  }
  if (is_standard(eq) && eq.b() < m_) {
    return Certificate{StandardNaturalBound{eq.b(), m_}};
  }
  return std::nullopt;
}

Verdict Analyzer::analyze_natural(const Equation& eq) const {
  if (eq.mode() != Mode::Natural) throw std::invalid_argument("analyze_natural: equation is not in natural mode");
  if (eq.n() != n_ || eq.m() != m_) throw std::invalid_argument("analyzer: equation has a different (n, m)");
  if (auto cert = natural_special_cases(eq)) {
    return {Outcome::Insoluble, std::move(*cert), std::nullopt};
  }
  const Reduction red = reduce(eq);
  const BigInt target = red.result().rhs();
  // A certificate against all non-negative solutions also excludes natural ones.
  if (target > m_) {
    if (auto cert = certify(target)) {
      return {Outcome::Insoluble, wrap(red, std::move(*cert)), std::nullopt};
    }
  }
  return count_verdict(red, Mode::Natural);
}

Verdict analyze(const Equation& eq, const AnalysisOptions& options) {
  return Analyzer(eq.n(), eq.m(), options).analyze(eq);
}

Verdict analyze_natural(const Equation& eq, const AnalysisOptions& options) {
  if (eq.mode() != Mode::Natural) throw std::invalid_argument("analyze_natural: equation is not in natural mode");
  return Analyzer(eq.n(), eq.m(), options).analyze_natural(eq);
}

} // namespace powersum
