#pragma once

// Exact integer primitives: primality, factorization, totients of prime
// powers, valuations of factorials, integer roots and power residues.

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <vector>

#include "powersum/core.hpp"

namespace powersum {

struct PrimeFactor {
  std::uint64_t prime = 0;
  unsigned exponent = 0;

  friend bool operator==(const PrimeFactor&, const PrimeFactor&) = default;
};

/// Canonical factorization: primes strictly increasing, exponents positive.
struct Factorization {
  std::vector<PrimeFactor> factors;

  BigInt value() const;
  friend bool operator==(const Factorization&, const Factorization&) = default;
};

/// Trial division runs over candidates up to trial_bound. A cofactor left
/// after that must fit in 64 bits (it is then split with Pollard rho) and
/// have at most max_cofactor_digits decimal digits.
struct FactorizeLimits {
  std::uint64_t trial_bound = 1'000'000;
  unsigned max_cofactor_digits = 19;
};

/// Raised when a cofactor is too large for the desk-scale factorizer.
class FactorizationLimit : public BudgetExceeded {
public:
  using BudgetExceeded::BudgetExceeded;
};

/// Deterministic Miller-Rabin for the full 64-bit range.
bool is_prime(std::uint64_t n);

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t mod);
std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod);

/// N = 1 yields an empty factorization. Throws std::invalid_argument for N < 1
/// and FactorizationLimit when a large cofactor survives trial division.
Factorization factorize(const BigInt& N, const FactorizeLimits& limits = {});
Factorization factorize(std::uint64_t N, const FactorizeLimits& limits = {});

/// All positive divisors of n, ascending.
std::vector<std::uint64_t> divisors(std::uint64_t n);

/// phi(p^k) = p^(k-1) (p-1). Throws std::invalid_argument unless p is prime
/// and k >= 1.
BigInt euler_phi_prime_power(std::uint64_t p, unsigned k);

/// Exponent of the prime p in n!, via the floor sum n/p + n/p^2 + ...
std::uint64_t legendre_valuation(std::uint64_t n, std::uint64_t p);

/// True iff p^(k+1) | C(n,j) p^(n-j) for every j in [1, n-1].
/// Requires p prime, k >= 1 and p^k | n.
bool verify_binomial_divisibility(std::uint64_t p, unsigned k, std::uint64_t n);

/// floor(d^(1/n)) by bisection on the exact predicate r^n <= d.
BigInt integer_nth_root(const BigInt& d, unsigned n);
std::uint64_t integer_nth_root(std::uint64_t d, unsigned n);

/// {x^n mod c : 0 <= x < c}, sorted ascending.
class ResidueSet {
public:
  ResidueSet(std::uint64_t modulus, std::vector<std::uint64_t> residues);

  std::uint64_t modulus() const { return modulus_; }
  const std::vector<std::uint64_t>& residues() const { return residues_; }
  bool contains(std::uint64_t r) const;
  std::size_t size() const { return residues_.size(); }

  /// Every residue is one of the listed values (mod the modulus).
  bool subset_of(std::initializer_list<std::int64_t> allowed) const;

  friend bool operator==(const ResidueSet&, const ResidueSet&) = default;

private:
  std::uint64_t modulus_;
  std::vector<std::uint64_t> residues_;
};

ResidueSet power_residues(std::uint64_t n, std::uint64_t c);

/// p^k when p is prime and c = p^k with k >= 1.
struct PrimePowerForm {
  std::uint64_t prime;
  unsigned exponent;
};
std::optional<PrimePowerForm> as_prime_power(std::uint64_t c);

} // namespace powersum
