#include "powersum/numtheory.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace powersum {

namespace {

using u128 = unsigned __int128;

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) { return std::gcd(a, b); }

// Brent's variant of Pollard rho. n must be odd, composite and > 3.
std::uint64_t pollard_brent(std::uint64_t n) {
  for (std::uint64_t c = 1;; ++c) {
    auto f = [&](std::uint64_t x) { return (mulmod(x, x, n) + c) % n; };
    std::uint64_t y = 2, x = 2, g = 1, q = 1, ys = 2;
    std::uint64_t r = 1;
    constexpr std::uint64_t batch = 128;
    do {
      x = y;
      for (std::uint64_t i = 0; i < r; ++i) y = f(y);
      std::uint64_t k = 0;
      do {
        ys = y;
        for (std::uint64_t i = 0; i < std::min(batch, r - k); ++i) {
          y = f(y);
          q = mulmod(q, x > y ? x - y : y - x, n);
        }
        g = gcd_u64(q, n);
        k += batch;
      } while (k < r && g == 1);
      r *= 2;
    } while (g == 1);
    if (g == n) {
      do {
        ys = f(ys);
        g = gcd_u64(x > ys ? x - ys : ys - x, n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void split_u64(std::uint64_t n, std::vector<std::uint64_t>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    out.push_back(n);
    return;
  }
  std::uint64_t d = pollard_brent(n);
  split_u64(d, out);
  split_u64(n / d, out);
}

void push_factor(std::vector<PrimeFactor>& factors, std::uint64_t p, unsigned e) {
  if (e == 0) return;
  for (auto& f : factors) {
    if (f.prime == p) {
      f.exponent += e;
      return;
    }
  }
  factors.push_back({p, e});
}

std::uint64_t checked_pow(std::uint64_t base, unsigned exp, bool& overflow) {
  u128 result = 1;
  overflow = false;
  for (unsigned i = 0; i < exp; ++i) {
    result *= base;
    if (result > std::numeric_limits<std::uint64_t>::max()) {
      overflow = true;
      return 0;
    }
  }
  return static_cast<std::uint64_t>(result);
}

} // namespace

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t mod) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % mod);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) {
  if (mod == 1) return 0;
  std::uint64_t result = 1;
  base %= mod;
  while (exp > 0) {
    if (exp & 1) result = mulmod(result, base, mod);
    base = mulmod(base, base, mod);
    exp >>= 1;
  }
  return result;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // These twelve bases are a deterministic witness set below 3.3e24.
  for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (unsigned r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

BigInt Factorization::value() const {
  BigInt v = 1;
  for (const auto& f : factors) v *= boost::multiprecision::pow(BigInt(f.prime), f.exponent);
  return v;
}

Factorization factorize(std::uint64_t N, const FactorizeLimits& limits) {
  return factorize(BigInt(N), limits);
}

Factorization factorize(const BigInt& N, const FactorizeLimits& limits) {
  if (N < 1) {
    throw std::invalid_argument("factorize: argument must be positive");
  }
  Factorization result;
  BigInt rest = N;

  auto strip = [&](std::uint64_t d) {
    unsigned e = 0;
    while (rest % d == 0) {
      rest /= d;
      ++e;
    }
    push_factor(result.factors, d, e);
  };

  strip(2);
  strip(3);
  std::uint64_t d = 5;
  bool exhausted = false;
  for (; d <= limits.trial_bound; d += 6) {
    if (BigInt(d) * d > rest) {
      exhausted = true;
      break;
    }
    strip(d);
    strip(d + 2);
  }
  if (rest > 1) {
    if (exhausted || rest < BigInt(d) * d) {
      // No factor below sqrt(rest) remains, so rest is prime.
      push_factor(result.factors, to_u64(rest), 1);
    } else {
      if (rest.str().size() > limits.max_cofactor_digits ||
          rest > std::numeric_limits<std::uint64_t>::max()) {
        throw FactorizationLimit("factorize: cofactor " + rest.str() +
                                 " exceeds the configured digit budget");
      }
      std::vector<std::uint64_t> primes;
      split_u64(rest.convert_to<std::uint64_t>(), primes);
      for (std::uint64_t p : primes) push_factor(result.factors, p, 1);
    }
  }
  std::sort(result.factors.begin(), result.factors.end(),
            [](const PrimeFactor& a, const PrimeFactor& b) { return a.prime < b.prime; });
  return result;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("divisors: argument must be positive");
  std::vector<std::uint64_t> out{1};
  for (const auto& f : factorize(n).factors) {
    const std::size_t base = out.size();
    std::uint64_t pk = 1;
    for (unsigned e = 1; e <= f.exponent; ++e) {
      pk *= f.prime;
      for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

BigInt euler_phi_prime_power(std::uint64_t p, unsigned k) {
  if (!is_prime(p)) throw std::invalid_argument("euler_phi_prime_power: p must be prime");
  if (k == 0) throw std::invalid_argument("euler_phi_prime_power: k must be positive");
  return boost::multiprecision::pow(BigInt(p), k - 1) * (p - 1);
}

std::uint64_t legendre_valuation(std::uint64_t n, std::uint64_t p) {
  if (!is_prime(p)) throw std::invalid_argument("legendre_valuation: p must be prime");
  std::uint64_t total = 0;
  std::uint64_t q = p;
  while (q <= n) {
    total += n / q;
    if (q > n / p) break;
    q *= p;
  }
  return total;
}

bool verify_binomial_divisibility(std::uint64_t p, unsigned k, std::uint64_t n) {
  if (!is_prime(p)) throw std::invalid_argument("verify_binomial_divisibility: p must be prime");
  if (k == 0 || n == 0) throw std::invalid_argument("verify_binomial_divisibility: k, n must be positive");
  const BigInt pk = boost::multiprecision::pow(BigInt(p), k);
  if (n % pk != 0) {
    throw std::invalid_argument("verify_binomial_divisibility: requires p^k | n");
  }
  const BigInt modulus = pk * p;
  BigInt binom = 1; // C(n, j), updated incrementally
  for (std::uint64_t j = 1; j < n; ++j) {
    binom = binom * (n - j + 1) / j;
    BigInt term = binom * boost::multiprecision::pow(BigInt(p), static_cast<unsigned>(n - j));
    if (term % modulus != 0) return false;
  }
  return true;
}

BigInt integer_nth_root(const BigInt& d, unsigned n) {
  if (n == 0) throw std::invalid_argument("integer_nth_root: n must be positive");
  if (d < 0) throw std::invalid_argument("integer_nth_root: d must be non-negative");
  if (d < 2 || n == 1) return d;
  const unsigned bits = static_cast<unsigned>(boost::multiprecision::msb(d)) + 1;
  BigInt lo = 0;
  BigInt hi = BigInt(1) << (bits / n + 1); // hi^n > d
  while (hi - lo > 1) {
    BigInt mid = (lo + hi) >> 1;
    if (boost::multiprecision::pow(mid, n) <= d) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return lo;
}

std::uint64_t integer_nth_root(std::uint64_t d, unsigned n) {
  if (n == 0) throw std::invalid_argument("integer_nth_root: n must be positive");
  if (d < 2 || n == 1) return d;
  std::uint64_t lo = 0;
  std::uint64_t hi = n >= 64 ? 2 : (std::uint64_t{1} << (64 / n + 1));
  while (hi - lo > 1) {
    std::uint64_t mid = lo + (hi - lo) / 2;
    bool overflow = false;
    std::uint64_t v = checked_pow(mid, n, overflow);
    if (!overflow && v <= d) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return lo;
}

ResidueSet::ResidueSet(std::uint64_t modulus, std::vector<std::uint64_t> residues)
    : modulus_(modulus), residues_(std::move(residues)) {
  if (modulus_ < 2) throw std::invalid_argument("ResidueSet: modulus must be at least 2");
  std::sort(residues_.begin(), residues_.end());
  residues_.erase(std::unique(residues_.begin(), residues_.end()), residues_.end());
  if (!residues_.empty() && residues_.back() >= modulus_) {
    throw std::invalid_argument("ResidueSet: residue out of range");
  }
}

bool ResidueSet::contains(std::uint64_t r) const {
  return std::binary_search(residues_.begin(), residues_.end(), r);
}

bool ResidueSet::subset_of(std::initializer_list<std::int64_t> allowed) const {
  const auto m = static_cast<std::int64_t>(modulus_);
  return std::all_of(residues_.begin(), residues_.end(), [&](std::uint64_t r) {
    return std::any_of(allowed.begin(), allowed.end(), [&](std::int64_t a) {
      return static_cast<std::uint64_t>(((a % m) + m) % m) == r;
    });
  });
}

ResidueSet power_residues(std::uint64_t n, std::uint64_t c) {
  if (n == 0) throw std::invalid_argument("power_residues: exponent must be positive");
  if (c < 2) throw std::invalid_argument("power_residues: modulus must be at least 2");
  std::vector<char> seen(c, 0);
  std::vector<std::uint64_t> residues;
  for (std::uint64_t x = 0; x < c; ++x) {
    std::uint64_t r = x == 0 ? 0 : powmod(x, n, c);
    if (!seen[r]) {
      seen[r] = 1;
      residues.push_back(r);
    }
  }
  return ResidueSet(c, std::move(residues));
}

std::optional<PrimePowerForm> as_prime_power(std::uint64_t c) {
  if (c < 2) return std::nullopt;
  const auto f = factorize(c);
  if (f.factors.size() != 1) return std::nullopt;
  return PrimePowerForm{f.factors.front().prime, f.factors.front().exponent};
}

} // namespace powersum
