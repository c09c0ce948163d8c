#include <doctest.h>

#include <random>

#include "powersum/numtheory.hpp"

using namespace powersum;

namespace {

// Direct valuation of n! by factoring each factor.
std::uint64_t factorial_valuation(std::uint64_t n, std::uint64_t p) {
  std::uint64_t v = 0;
  for (std::uint64_t i = 2; i <= n; ++i) {
    for (std::uint64_t x = i; x % p == 0; x /= p) ++v;
  }
  return v;
}

bool slow_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

} // namespace

TEST_CASE("factorize: worked values") {
  CHECK(factorize(BigInt(233280)).factors == std::vector<PrimeFactor>{{2, 6}, {3, 6}, {5, 1}});
  CHECK(factorize(BigInt(1)).factors.empty());
  CHECK(factorize(BigInt(73728)).factors == std::vector<PrimeFactor>{{2, 13}, {3, 2}});
}

TEST_CASE("factorize: errors") {
  CHECK_THROWS_AS(factorize(BigInt(0)), std::invalid_argument);
  CHECK_THROWS_AS(factorize(BigInt(-5)), std::invalid_argument);
  // A 27-digit prime cofactor is past the digit budget.
  const BigInt big = BigInt("618970019642690137449562111"); // 2^89 - 1, prime
  CHECK_THROWS_AS(factorize(big), FactorizationLimit);
  CHECK_THROWS_AS(factorize(big), BudgetExceeded);
}

TEST_CASE("factorize: large semiprime within budget goes through Pollard rho") {
  const std::uint64_t p = 1000003, q = 998244353;
  const auto f = factorize(BigInt(p) * q);
  CHECK(f.factors == std::vector<PrimeFactor>{{q < p ? q : p, 1}, {q < p ? p : q, 1}});
  const std::uint64_t r = 999999937; // largest prime below 10^9
  CHECK(factorize(BigInt(r) * r).factors == std::vector<PrimeFactor>{{r, 2}});
}

TEST_CASE("factorize: recomposition round-trips") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 2000; ++i) {
    const std::uint64_t n = 1 + rng() % 10'000'000'000ull;
    const Factorization f = factorize(n);
    CHECK(f.value() == n);
    for (std::size_t j = 0; j < f.factors.size(); ++j) {
      CHECK(is_prime(f.factors[j].prime));
      CHECK(f.factors[j].exponent >= 1);
      if (j > 0) CHECK(f.factors[j - 1].prime < f.factors[j].prime);
    }
  }
  // Smooth numbers with large exponents.
  const BigInt smooth = boost::multiprecision::pow(BigInt(2), 200) * boost::multiprecision::pow(BigInt(3), 90) * 7;
  CHECK(factorize(smooth).factors == std::vector<PrimeFactor>{{2, 200}, {3, 90}, {7, 1}});
}

TEST_CASE("is_prime agrees with trial division") {
  for (std::uint64_t n = 0; n < 20000; ++n) CHECK(is_prime(n) == slow_prime(n));
  CHECK(is_prime(18446744073709551557ull));
  CHECK_FALSE(is_prime(3825123056546413051ull)); // strong pseudoprime to several small bases
}

TEST_CASE("divisors") {
  CHECK(divisors(12) == std::vector<std::uint64_t>{1, 2, 3, 4, 6, 12});
  CHECK(divisors(1) == std::vector<std::uint64_t>{1});
  for (std::uint64_t n = 1; n <= 500; ++n) {
    std::vector<std::uint64_t> slow;
    for (std::uint64_t d = 1; d <= n; ++d) {
      if (n % d == 0) slow.push_back(d);
    }
    CHECK(divisors(n) == slow);
  }
}

TEST_CASE("euler_phi_prime_power") {
  CHECK(euler_phi_prime_power(2, 2) == 2);
  CHECK(euler_phi_prime_power(3, 1) == 2);
  CHECK(euler_phi_prime_power(5, 2) == 20);
  CHECK(euler_phi_prime_power(2, 1) == 1);
  CHECK_THROWS_AS(euler_phi_prime_power(4, 1), std::invalid_argument);
  CHECK_THROWS_AS(euler_phi_prime_power(3, 0), std::invalid_argument);
}

TEST_CASE("legendre_valuation") {
  CHECK(legendre_valuation(4, 2) == 3);
  CHECK(legendre_valuation(1, 5) == 0);
  CHECK(legendre_valuation(10, 3) == 4);
  for (std::uint64_t n = 1; n <= 300; ++n) {
    for (std::uint64_t p : {2, 3, 5, 7, 11, 13}) {
      CHECK(legendre_valuation(n, p) == factorial_valuation(n, p));
      // The valuation of n! is always below n.
      if (p <= n) CHECK(legendre_valuation(n, p) < n);
    }
  }
}

TEST_CASE("x^phi(p^k) is 1 for units and 0 for multiples, all p^k <= 81") {
  for (std::uint64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79}) {
    std::uint64_t pk = p;
    for (unsigned k = 1; pk <= 81; ++k, pk *= p) {
      const std::uint64_t phi = euler_phi_prime_power(p, k).convert_to<std::uint64_t>();
      for (std::uint64_t x = 1; x < pk; ++x) {
        const std::uint64_t r = powmod(x, phi, pk);
        if (x % p != 0) {
          CHECK(r == 1);
        } else if (phi >= k) {
          CHECK(r == 0);
        }
      }
    }
  }
}

TEST_CASE("verify_binomial_divisibility") {
  CHECK(verify_binomial_divisibility(2, 1, 4));
  CHECK(verify_binomial_divisibility(3, 1, 6));
  CHECK(verify_binomial_divisibility(2, 2, 4));
  for (std::uint64_t p : {2, 3, 5, 7}) {
    std::uint64_t pk = p;
    for (unsigned k = 1; pk <= 64; ++k, pk *= p) {
      for (std::uint64_t n = pk; n <= 64; n += pk) {
        CHECK_MESSAGE(verify_binomial_divisibility(p, k, n), "p=" << p << " k=" << k << " n=" << n);
      }
    }
  }
  CHECK_THROWS_AS(verify_binomial_divisibility(2, 2, 6), std::invalid_argument);
  CHECK_THROWS_AS(verify_binomial_divisibility(4, 1, 8), std::invalid_argument);
}

TEST_CASE("integer_nth_root") {
  CHECK(integer_nth_root(BigInt(25), 2) == 5);
  CHECK(integer_nth_root(BigInt(0), 7) == 0);
  CHECK(integer_nth_root(BigInt(23607), 15) == 1);
  CHECK(integer_nth_root(std::uint64_t{18446744073709551615ull}, 2) == 4294967295ull);
  CHECK(integer_nth_root(std::uint64_t{18446744073709551615ull}, 64) == 1);
  const BigInt big = boost::multiprecision::pow(BigInt(123456789), 13);
  CHECK(integer_nth_root(big, 13) == 123456789);
  CHECK(integer_nth_root(big - 1, 13) == 123456788);
  std::mt19937_64 rng(11);
  for (int i = 0; i < 3000; ++i) {
    const std::uint64_t d = rng() >> (rng() % 60);
    const unsigned n = 2 + rng() % 12;
    const BigInt r = integer_nth_root(BigInt(d), n);
    CHECK(boost::multiprecision::pow(r, n) <= d);
    CHECK(boost::multiprecision::pow(r + 1, n) > d);
    CHECK(r == integer_nth_root(d, n));
  }
}

TEST_CASE("power_residues") {
  CHECK(power_residues(2, 8).residues() == std::vector<std::uint64_t>{0, 1, 4});
  CHECK(power_residues(2, 4).residues() == std::vector<std::uint64_t>{0, 1});
  CHECK(power_residues(6, 9).residues() == std::vector<std::uint64_t>{0, 1});
  CHECK(power_residues(3, 9).subset_of({0, 1, -1}));
  CHECK_FALSE(power_residues(2, 9).subset_of({0, 1, -1}));
  for (std::uint64_t c = 2; c <= 60; ++c) {
    for (std::uint64_t n = 1; n <= 12; ++n) {
      const ResidueSet rs = power_residues(n, c);
      CHECK(rs.contains(0));
      CHECK(rs.contains(1));
      std::vector<bool> seen(c);
      for (std::uint64_t x = 0; x < c; ++x) seen[powmod(x, n, c)] = true;
      CHECK(rs.size() == static_cast<std::size_t>(std::count(seen.begin(), seen.end(), true)));
    }
  }
}

TEST_CASE("as_prime_power") {
  auto f = as_prime_power(16);
  REQUIRE(f);
  CHECK(f->prime == 2);
  CHECK(f->exponent == 4);
  CHECK_FALSE(as_prime_power(12));
  CHECK_FALSE(as_prime_power(1));
  CHECK(as_prime_power(13)->exponent == 1);
}
