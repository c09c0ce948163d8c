#pragma once

// Insolubility certificates for sum_{i=1..m} x_i^n = b (and, after
// reduction, = b c^n), and the dispatcher that combines them into a verdict.
//
// Every criterion is sufficient, not necessary: when none fires and the
// oracle is out of budget the answer is Unknown.

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "powersum/core.hpp"
#include "powersum/oracle.hpp"
#include "powersum/reduction.hpp"

namespace powersum {

// ---------------------------------------------------------------------------
// Certificates

/// b' copies of a value w among the m slots: b' w^n equals the right-hand side.
struct TrivialSolvable {
  BigInt copies;
  BigInt value;
  friend bool operator==(const TrivialSolvable&, const TrivialSolvable&) = default;
};

/// Sums of m n-th powers avoid [m l^n + 1, (l+1)^n - 1] when
/// m < (1 + 1/l)^n - 1, i.e. (m + 1) l^n < (l + 1)^n.
struct GapInterval {
  BigInt l;
  friend bool operator==(const GapInterval&, const GapInterval&) = default;
};

/// Which argument puts x^n in {0, 1} modulo the modulus.
enum class ZeroOneFamily {
  Generic,      // residues checked directly
  TotientPower, // p^k with phi(p^k) | n
  EvenPairMod4, // m = 2, n even, modulus 4: rhs = 3 (mod 4) is never a sum
  DyadicPower,  // 2^(k+2) with 2^k | n, k >= 2
};

/// x^n is 0 or 1 mod c, m < c - 1 and b mod c > m.
struct ResidueZeroOne {
  std::uint64_t modulus = 0;
  std::uint64_t remainder = 0;
  ZeroOneFamily family = ZeroOneFamily::Generic;
  friend bool operator==(const ResidueZeroOne&, const ResidueZeroOne&) = default;
};

/// x^n is 0 or +-1 mod p^k, m < (p^k - 1)/2 and b mod p^k in [m+1, p^k-m-1].
struct ResiduePlusMinus {
  std::uint64_t prime = 0;
  unsigned exponent = 0;
  std::uint64_t modulus = 0;
  std::uint64_t remainder = 0;
  friend bool operator==(const ResiduePlusMinus&, const ResiduePlusMinus&) = default;
};

/// b mod c lies outside the m-fold sumset of n-th power residues mod c.
struct GeneralResidue {
  std::uint64_t modulus = 0;
  std::uint64_t remainder = 0;
  std::uint64_t attainable = 0; // size of the sumset
  friend bool operator==(const GeneralResidue&, const GeneralResidue&) = default;
};

/// Standard equation with b < m has no natural solution.
struct StandardNaturalBound {
  BigInt b;
  std::uint64_t m = 0;
  friend bool operator==(const StandardNaturalBound&, const StandardNaturalBound&) = default;
};

/// x^n + y^n = (p^s)^n, n >= 3, has no natural solution.
struct PrimePowerFermat {
  std::uint64_t prime = 0;
  std::uint64_t s = 0;
  std::uint64_t n = 0;
  friend bool operator==(const PrimePowerFermat&, const PrimePowerFermat&) = default;
};

/// x^n + y^n = (p^s q_1^s_1 ... q_l^s_l)^n with n even >= 4 and every q_i a
/// phi-divisor of n has no natural solution. prime = 0 when s = 0.
struct PhiAugmentedFermat {
  std::uint64_t prime = 0;
  std::uint64_t s = 0;
  std::vector<StrippedFactor> stripped;
  friend bool operator==(const PhiAugmentedFermat&, const PhiAugmentedFermat&) = default;
};

/// The oracle enumerated every candidate and found this many solutions.
struct ExhaustiveCount {
  BigInt rhs;
  Mode mode = Mode::NonNegative;
  BigInt count;
  friend bool operator==(const ExhaustiveCount&, const ExhaustiveCount&) = default;
};

struct Certificate;

/// The inner certificate applies to reduction.result(); the reduction
/// preserves the solution count.
struct ReducedBy {
  Reduction reduction;
  std::shared_ptr<const Certificate> inner;
  friend bool operator==(const ReducedBy& a, const ReducedBy& b);
};

struct Certificate {
  using Variant = std::variant<TrivialSolvable, GapInterval, ResidueZeroOne, ResiduePlusMinus,
                               GeneralResidue, StandardNaturalBound, PrimePowerFermat,
                               PhiAugmentedFermat, ExhaustiveCount, ReducedBy>;
  Variant value;

  /// Stable machine name of the argument, e.g. "gap_interval".
  std::string_view name() const;
  /// The innermost certificate (unwraps ReducedBy).
  const Certificate& innermost() const;

  friend bool operator==(const Certificate&, const Certificate&) = default;
};

std::string_view family_name(ZeroOneFamily family);

/// Re-derives every hypothesis of the certificate for the given equation.
/// Residue and gap certificates are checked against eq.rhs().
bool verify_certificate(const Certificate& cert, const Equation& eq);

// ---------------------------------------------------------------------------
// Criteria on sum_{i=1..m} x_i^n = b

/// Requires b > m (b <= m is trivially solvable).
std::optional<Certificate> check_gap(std::uint64_t n, std::uint64_t m, const BigInt& b);

/// Requires power_residues(n, c) to be a subset of {0, 1}; throws
/// std::invalid_argument otherwise.
std::optional<Certificate> check_zero_one_residue(std::uint64_t n, std::uint64_t m,
                                                  const BigInt& b, std::uint64_t c);

struct ZeroOneModulus {
  std::uint64_t modulus = 0;
  ZeroOneFamily family = ZeroOneFamily::TotientPower;
  friend bool operator==(const ZeroOneModulus&, const ZeroOneModulus&) = default;
};

/// p^k with phi(p^k) | n, p^k >= 3, m < p^k - 1; and 2^(k+2) with 2^k | n,
/// k >= 2, m < 2^(k+2) - 1. Ascending, without duplicates.
std::vector<ZeroOneModulus> candidate_zero_one_moduli(std::uint64_t n, std::uint64_t m);

/// Requires p >= 3 prime and h = phi(p^k)/2 dividing n with n/h odd; throws
/// std::invalid_argument otherwise.
std::optional<Certificate> check_plus_minus_residue(std::uint64_t n, std::uint64_t m,
                                                    const BigInt& b, std::uint64_t p,
                                                    unsigned k);

struct PlusMinusModulus {
  std::uint64_t prime = 0;
  unsigned exponent = 0;
  std::uint64_t modulus = 0;
  friend bool operator==(const PlusMinusModulus&, const PlusMinusModulus&) = default;
};

/// Every p^k satisfying the plus-minus exponent condition with
/// m < (p^k - 1)/2, ascending by modulus.
std::vector<PlusMinusModulus> candidate_plus_minus_moduli(std::uint64_t n, std::uint64_t m);

/// Residues reachable as a sum of m n-th powers modulo c (bitmap of size c).
std::vector<bool> attainable_residues(std::uint64_t n, std::uint64_t m, std::uint64_t c);

/// Requires c >= 2.
std::optional<Certificate> check_general_residue(std::uint64_t n, std::uint64_t m,
                                                 const BigInt& b, std::uint64_t c);

/// Prime powers p^k <= cap with (p - 1) | 2n, ascending.
std::vector<std::uint64_t> candidate_general_moduli(std::uint64_t n, std::uint64_t cap);

// ---------------------------------------------------------------------------
// Verdicts

enum class Outcome { Solvable, Insoluble, Unknown };

std::string_view to_string(Outcome outcome);

struct Verdict {
  Outcome outcome = Outcome::Unknown;
  std::optional<Certificate> certificate; // always set when Insoluble
  std::optional<BigInt> count;            // exact count when the oracle ran

  friend bool operator==(const Verdict&, const Verdict&) = default;
};

struct AnalysisOptions {
  OracleBudget oracle;
  /// Moduli above this are not tried by the general residue criterion.
  std::uint64_t modulus_cap = 4096;
  /// Fall back to exact counting when no certificate is found.
  bool use_oracle = true;
};

/// Dispatcher for a fixed (n, m). Caches the candidate moduli and their
/// residue sumsets so that sweeps over many right-hand sides stay cheap.
/// Criteria are tried in a fixed order: gap, zero-one moduli, plus-minus
/// moduli, general residue moduli (each list ascending).
class Analyzer {
public:
  Analyzer(std::uint64_t n, std::uint64_t m, AnalysisOptions options = {});

  std::uint64_t n() const { return n_; }
  std::uint64_t m() const { return m_; }

  /// First certificate of insolubility for sum x_i^n = target, if any.
  /// Requires target > m.
  std::optional<Certificate> certify(const BigInt& target) const;

  /// Every criterion that fires for target, in precedence order.
  std::vector<Certificate> all_certificates(const BigInt& target) const;

  /// Non-negative analysis of sum x_i^n = b c^n.
  Verdict analyze(const Equation& eq) const;
  /// Natural analysis of sum x_i^n = b c^n.
  Verdict analyze_natural(const Equation& eq) const;

  const std::vector<ZeroOneModulus>& zero_one_moduli() const { return zero_one_; }
  const std::vector<PlusMinusModulus>& plus_minus_moduli() const { return plus_minus_; }
  const std::vector<std::uint64_t>& general_moduli() const { return general_; }

private:
  std::optional<Certificate> natural_special_cases(const Equation& eq) const;
  Verdict count_verdict(const Reduction& red, Mode mode) const;

  std::uint64_t n_;
  std::uint64_t m_;
  AnalysisOptions options_;
  std::vector<ZeroOneModulus> zero_one_;
  std::vector<PlusMinusModulus> plus_minus_;
  std::vector<std::uint64_t> general_;
  std::vector<std::vector<bool>> general_sets_;
};

/// Pipeline: reduce, trivial witness when the reduced coefficient is <= m,
/// criteria on the reduced right-hand side, exact count within budget,
/// otherwise Unknown. Dispatches to analyze_natural for Natural equations.
Verdict analyze(const Equation& eq, const AnalysisOptions& options = {});

/// Throws std::invalid_argument for NonNegative equations.
Verdict analyze_natural(const Equation& eq, const AnalysisOptions& options = {});

} // namespace powersum
