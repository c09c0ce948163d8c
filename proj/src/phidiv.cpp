#include "powersum/phidiv.hpp"

#include <stdexcept>

#include "powersum/numtheory.hpp"

namespace powersum {

std::optional<unsigned> phi_divisor_degree(std::uint64_t p, std::uint64_t n) {
  if (!is_prime(p)) throw std::invalid_argument("phi_divisor_degree: p must be prime");
  if (n == 0) throw std::invalid_argument("phi_divisor_degree: n must be positive");
  if (n % 2 != 0) return std::nullopt;

  // phi(p^k) | phi(p^(k+1)), so the admissible k form a prefix 1..K and the
  // loop stops at the first k that fails. phi grows by a factor p per step.
  unsigned best = 0;
  for (unsigned k = 1;; ++k) {
    if (euler_phi_prime_power(p, k) > n || n % euler_phi_prime_power(p, k) != 0) break;
    best = k;
  }
  // 2^1 < 3 is excluded; for odd p every k >= 1 gives p^k >= 3.
  if (best == 0 || (p == 2 && best < 2)) return std::nullopt;
  return best;
}

std::optional<PhiDivisor> phi_divisor(std::uint64_t p, std::uint64_t n) {
  auto k = phi_divisor_degree(p, n);
  if (!k) return std::nullopt;
  std::uint64_t pk = 1;
  for (unsigned i = 0; i < *k; ++i) pk *= p;
  return PhiDivisor{p, *k, pk};
}

std::vector<PhiDivisor> all_phi_divisors(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("all_phi_divisors: n must be positive");
  std::vector<PhiDivisor> out;
  if (n % 2 != 0) return out;
  // A phi-divisor satisfies (p-1) | n, so p = d + 1 for a divisor d of n.
  for (std::uint64_t d : divisors(n)) {
    const std::uint64_t p = d + 1;
    if (!is_prime(p)) continue;
    if (auto pd = phi_divisor(p, n)) out.push_back(*pd);
  }
  return out;
}

} // namespace powersum
