#include "powersum/reduction.hpp"

#include <stdexcept>

#include "powersum/numtheory.hpp"

namespace powersum {

namespace mp = boost::multiprecision;

Equation::Equation(std::uint64_t n, std::uint64_t m, BigInt b, BigInt c, Mode mode)
    : n_(n), m_(m), b_(std::move(b)), c_(std::move(c)), mode_(mode) {
  if (n_ < 2) throw std::invalid_argument("equation: exponent n must be at least 2");
  if (n_ > max_exponent) throw std::invalid_argument("equation: exponent n is too large");
  if (m_ < 2) throw std::invalid_argument("equation: number of terms m must be at least 2");
  if (b_ < 0) throw std::invalid_argument("equation: b must be non-negative");
  if (c_ < 1) throw std::invalid_argument("equation: c must be positive");
}

BigInt Equation::rhs() const { return b_ * mp::pow(c_, static_cast<unsigned>(n_)); }

std::vector<PhiDivisor> eligible_phi_divisors(std::uint64_t n, std::uint64_t m) {
  std::vector<PhiDivisor> out;
  for (const auto& pd : all_phi_divisors(n)) {
    if (m <= pd.prime_power - 1) out.push_back(pd);
  }
  return out;
}

bool is_standard(const Equation& eq) {
  if (eq.n() % 2 != 0) return false;
  for (const auto& f : factorize(eq.c()).factors) {
    auto pd = phi_divisor(f.prime, eq.n());
    if (!pd || eq.m() > pd->prime_power - 1) return false;
  }
  return true;
}

ReductionTrace reduce_equation(const Equation& eq) {
  std::vector<StrippedFactor> stripped;
  BigInt rest = 1;
  if (eq.n() % 2 == 0) {
    for (const auto& f : factorize(eq.c()).factors) {
      auto pd = phi_divisor(f.prime, eq.n());
      if (pd && eq.m() <= pd->prime_power - 1) {
        stripped.push_back({*pd, f.exponent});
      } else {
        rest *= mp::pow(BigInt(f.prime), f.exponent);
      }
    }
  } else {
    rest = eq.c();
  }
  Equation reduced(eq.n(), eq.m(), eq.b(), rest, eq.mode());
  return {eq, std::move(reduced), std::move(stripped)};
}

RhsReduction reduce_rhs(std::uint64_t n, std::uint64_t m, const BigInt& N) {
  if (N < 1) throw std::invalid_argument("reduce_rhs: N must be positive");
  RhsReduction out{N, N, {}};
  for (const auto& pd : eligible_phi_divisors(n, m)) {
    // Cheap filter before forming p^n.
    if (out.reduced % pd.prime != 0) continue;
    const BigInt pn = mp::pow(BigInt(pd.prime), static_cast<unsigned>(n));
    std::uint64_t count = 0;
    while (out.reduced % pn == 0) {
      out.reduced /= pn;
      ++count;
    }
    if (count > 0) out.stripped.push_back({pd, count});
  }
  return out;
}

Equation Reduction::result() const {
  const Equation& r = equation.reduced;
  return Equation(r.n(), r.m(), coefficient.reduced, r.c(), r.mode());
}

BigInt Reduction::witness_base() const {
  BigInt w = equation.original.c();
  for (const auto& s : coefficient.stripped) {
    w *= mp::pow(BigInt(s.divisor.prime), static_cast<unsigned>(s.multiplicity));
  }
  return w;
}

Reduction reduce(const Equation& eq) {
  ReductionTrace trace = reduce_equation(eq);
  const BigInt& b = trace.reduced.b();
  RhsReduction coefficient = b == 0 ? RhsReduction{0, 0, {}} : reduce_rhs(eq.n(), eq.m(), b);
  return {std::move(trace), std::move(coefficient)};
}

} // namespace powersum
