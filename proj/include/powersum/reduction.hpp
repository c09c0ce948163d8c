#pragma once

// Count-preserving reductions of sum_{i=1..m} x_i^n = b c^n.
//
// If p is a phi-divisor of n with degree k and m <= p^k - 1, then every
// solution of sum x_i^n = B p^n has all x_i divisible by p, so
// P(B p^n) = P(B) for every B >= 0. Stripping such factors, one p^n at a
// time, never changes the number of solutions in either counting mode.

#include <cstdint>
#include <vector>

#include "powersum/core.hpp"
#include "powersum/phidiv.hpp"

namespace powersum {

/// Upper bound on the exponent accepted by Equation.
inline constexpr std::uint64_t max_exponent = std::uint64_t{1} << 20;

/// sum_{i=1..m} x_i^n = b * c^n, solved in the given mode.
class Equation {
public:
  /// Throws std::invalid_argument unless 2 <= n <= max_exponent, m >= 2,
  /// b >= 0 and c >= 1.
  Equation(std::uint64_t n, std::uint64_t m, BigInt b, BigInt c, Mode mode = Mode::NonNegative);

  std::uint64_t n() const { return n_; }
  std::uint64_t m() const { return m_; }
  const BigInt& b() const { return b_; }
  const BigInt& c() const { return c_; }
  Mode mode() const { return mode_; }

  /// b * c^n
  BigInt rhs() const;

  friend bool operator==(const Equation&, const Equation&) = default;

private:
  std::uint64_t n_;
  std::uint64_t m_;
  BigInt b_;
  BigInt c_;
  Mode mode_;
};

struct StrippedFactor {
  PhiDivisor divisor;
  std::uint64_t multiplicity = 0; // number of p^n factors removed

  friend bool operator==(const StrippedFactor&, const StrippedFactor&) = default;
};

/// Result of stripping eligible primes from c.
/// reduced.c * prod p^multiplicity == original.c and reduced.b == original.b.
struct ReductionTrace {
  Equation original;
  Equation reduced;
  std::vector<StrippedFactor> stripped;

  bool changed() const { return !stripped.empty(); }
  friend bool operator==(const ReductionTrace&, const ReductionTrace&) = default;
};

/// Result of stripping eligible p^n factors from a raw right-hand side.
struct RhsReduction {
  BigInt original;
  BigInt reduced;
  std::vector<StrippedFactor> stripped;

  bool changed() const { return !stripped.empty(); }
  friend bool operator==(const RhsReduction&, const RhsReduction&) = default;
};

/// Even n, and every prime of c is a phi-divisor p of n of degree k with
/// m <= p^k - 1. c = 1 qualifies whenever n is even.
bool is_standard(const Equation& eq);

/// phi-divisors of n usable for stripping with m terms (m <= p^k - 1).
std::vector<PhiDivisor> eligible_phi_divisors(std::uint64_t n, std::uint64_t m);

/// Removes from c the full power of every eligible prime.
ReductionTrace reduce_equation(const Equation& eq);

/// Divides N by p^n while p^n | N, for every eligible phi-divisor p.
/// Requires N >= 1.
RhsReduction reduce_rhs(std::uint64_t n, std::uint64_t m, const BigInt& N);

/// reduce_equation, then reduce_rhs on the remaining coefficient b.
struct Reduction {
  ReductionTrace equation;
  RhsReduction coefficient;

  /// The reduced equation: coefficient.reduced * (equation.reduced.c)^n.
  Equation result() const;
  /// w such that original.rhs() == result().b() * w^n, i.e. the original c
  /// times every p^multiplicity pulled out of b.
  BigInt witness_base() const;
  bool changed() const { return equation.changed() || coefficient.changed(); }

  friend bool operator==(const Reduction&, const Reduction&) = default;
};

Reduction reduce(const Equation& eq);

} // namespace powersum
