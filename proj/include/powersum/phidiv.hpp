#pragma once

// phi-divisors of an exponent n: primes p for which some p^k >= 3 has
// phi(p^k) | n. For such p, x^n is 0 or 1 modulo p^k for every integer x,
// which is what makes the reductions and residue criteria work.

#include <cstdint>
#include <optional>
#include <vector>

namespace powersum {

struct PhiDivisor {
  std::uint64_t prime = 0;
  unsigned degree = 0;            // maximal k with phi(p^k) | n and p^k >= 3
  std::uint64_t prime_power = 0;  // p^degree

  friend bool operator==(const PhiDivisor&, const PhiDivisor&) = default;
};

/// Maximal k with phi(p^k) | n and p^k >= 3, or nullopt. Always nullopt for
/// odd n. Throws std::invalid_argument if p is not prime or n < 1.
std::optional<unsigned> phi_divisor_degree(std::uint64_t p, std::uint64_t n);

/// Every phi-divisor of n at its maximal degree, ordered by prime.
/// Empty for odd n.
std::vector<PhiDivisor> all_phi_divisors(std::uint64_t n);

/// The phi-divisor record for p if p is one, else nullopt.
std::optional<PhiDivisor> phi_divisor(std::uint64_t p, std::uint64_t n);

} // namespace powersum
