#include <doctest.h>

#include "powersum/numtheory.hpp"
#include "powersum/oracle.hpp"
#include "powersum/reduction.hpp"

using namespace powersum;
namespace mp = boost::multiprecision;

TEST_CASE("Equation validates its parameters") {
  CHECK_THROWS_AS(Equation(1, 2, 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(Equation(2, 1, 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(Equation(2, 2, -1, 1), std::invalid_argument);
  CHECK_THROWS_AS(Equation(2, 2, 1, 0), std::invalid_argument);
  CHECK_THROWS_AS(Equation(max_exponent + 1, 2, 1, 1), std::invalid_argument);
  CHECK(Equation(6, 3, 5, 6).rhs() == 233280);
}

TEST_CASE("is_standard") {
  for (std::uint64_t t = 1; t <= 6; ++t) {
    for (unsigned s1 = 0; s1 <= 3; ++s1) {
      for (unsigned s2 = 0; s2 <= 3; ++s2) {
        const BigInt c = mp::pow(BigInt(2), s1) * mp::pow(BigInt(3), s2);
        CHECK(is_standard(Equation(2 * t, 2, 7, c)));
      }
    }
  }
  CHECK(is_standard(Equation(12, 4, 1, 105)));
  CHECK_FALSE(is_standard(Equation(12, 5, 1, 5)));
  CHECK_FALSE(is_standard(Equation(3, 2, 1, 1)));
  CHECK(is_standard(Equation(4, 2, 1, 1)));
  CHECK_FALSE(is_standard(Equation(30, 3, 1, 5 * 154)));
}

TEST_CASE("reduce_equation") {
  auto t = reduce_equation(Equation(6, 3, 5, 6));
  CHECK(t.reduced == Equation(6, 3, 5, 1));
  CHECK(t.stripped.size() == 2);
  t = reduce_equation(Equation(4, 7, 18, 8));
  CHECK(t.reduced == Equation(4, 7, 18, 1));
  REQUIRE(t.stripped.size() == 1);
  CHECK(t.stripped[0].divisor.prime == 2);
  CHECK(t.stripped[0].multiplicity == 3);
  t = reduce_equation(Equation(5, 2, 3, 1));
  CHECK_FALSE(t.changed());
  CHECK(t.reduced == t.original);
  // 5 is not a phi-divisor of 2.
  CHECK(reduce_equation(Equation(2, 2, 1, 5)).reduced.c() == 5);
  // Natural mode is kept.
  CHECK(reduce_equation(Equation(2, 2, 1, 6, Mode::Natural)).reduced.mode() == Mode::Natural);
}

TEST_CASE("reduce_equation invariants") {
  for (std::uint64_t n = 2; n <= 12; ++n) {
    for (std::uint64_t m = 2; m <= 8; ++m) {
      for (std::uint64_t c = 1; c <= 400; ++c) {
        const Equation eq(n, m, 3, c);
        const auto t = reduce_equation(eq);
        BigInt back = t.reduced.c();
        for (const auto& s : t.stripped) {
          CHECK(m <= s.divisor.prime_power - 1);
          back *= mp::pow(BigInt(s.divisor.prime), static_cast<unsigned>(s.multiplicity));
        }
        CHECK(back == c);
        CHECK(t.reduced.b() == eq.b());
        if (is_standard(eq)) CHECK(t.reduced.c() == 1);
      }
    }
  }
}

TEST_CASE("reduce_rhs") {
  CHECK(reduce_rhs(6, 3, 233280).reduced == 5);
  CHECK(reduce_rhs(4, 7, 73728).reduced == 18);
  CHECK(reduce_rhs(2, 3, 240).reduced == 15);
  // 2^7 with n = 4: one factor 2^4 comes off, 2^3 stays.
  CHECK(reduce_rhs(4, 2, 128).reduced == 8);
  CHECK_THROWS_AS(reduce_rhs(2, 2, 0), std::invalid_argument);
  for (std::uint64_t n = 2; n <= 8; ++n) {
    for (std::uint64_t m = 2; m <= 5; ++m) {
      for (std::uint64_t N = 1; N <= 3000; ++N) {
        const auto once = reduce_rhs(n, m, N);
        CHECK(reduce_rhs(n, m, once.reduced).reduced == once.reduced);
        BigInt back = once.reduced;
        for (const auto& s : once.stripped) {
          back *= mp::pow(mp::pow(BigInt(s.divisor.prime), static_cast<unsigned>(n)),
                          static_cast<unsigned>(s.multiplicity));
        }
        CHECK(back == N);
      }
    }
  }
}

TEST_CASE("reduce combines both steps") {
  const Reduction r = reduce(Equation(2, 3, 4 * 47, 2));
  CHECK(r.result() == Equation(2, 3, 47, 1));
  CHECK(r.witness_base() == 4);
  CHECK(r.changed());
  const Reduction z = reduce(Equation(2, 2, 0, 7));
  CHECK(z.coefficient.reduced == 0);
  CHECK(z.result().rhs() == 0);
}

TEST_CASE("count preservation and monotonicity") {
  for (std::uint64_t n : {2, 4, 6}) {
    for (std::uint64_t m = 2; m <= 4; ++m) {
      const auto eligible = eligible_phi_divisors(n, m);
      for (const auto& pd : eligible) {
        for (std::uint64_t b = 0; b <= 30; ++b) {
          for (Mode mode : {Mode::NonNegative, Mode::Natural}) {
            BigInt c = pd.prime;
            while (b * mp::pow(c, static_cast<unsigned>(n)) <= 2'000'000) {
              const BigInt big = b * mp::pow(c, static_cast<unsigned>(n));
              const auto dd = big.convert_to<std::uint64_t>();
              CHECK(count_by_enumeration(n, m, dd, mode) == count_by_enumeration(n, m, b, mode));
              c *= pd.prime;
              if (b == 0) break;
            }
          }
        }
      }
      // Monotonicity for any c: P(b c^n) >= P(b).
      for (std::uint64_t b = 0; b <= 30; ++b) {
        for (std::uint64_t c = 2; b * mp::pow(BigInt(c), static_cast<unsigned>(n)) <= 200'000; ++c) {
          const auto dd = (b * mp::pow(BigInt(c), static_cast<unsigned>(n))).convert_to<std::uint64_t>();
          CHECK(count_by_enumeration(n, m, dd, Mode::NonNegative) >=
                count_by_enumeration(n, m, b, Mode::NonNegative));
          if (b == 0) break;
        }
      }
    }
  }
}

TEST_CASE("boundary m = p^k - 1 is eligible, m = p^k is not") {
  // n = 4: 2 has degree 3 (phi(8) = 4), so 2 is eligible for m <= 7 only.
  CHECK(eligible_phi_divisors(4, 7).front().prime == 2);
  CHECK(eligible_phi_divisors(4, 8).empty());
  // P(b 2^4) == P(b) at m = 7 ...
  for (std::uint64_t b = 0; b <= 40; ++b) {
    CHECK(count_by_enumeration(4, 7, 16 * b, Mode::NonNegative) ==
          count_by_enumeration(4, 7, b, Mode::NonNegative));
  }
  // For squares, 3 has degree 1: eligible at m = 2, and preservation does
  // fail at m = 3, where 2^2 + 2^2 + 1 = 9 has no counterpart at 1.
  CHECK(eligible_phi_divisors(2, 2).size() == 2);
  CHECK(eligible_phi_divisors(2, 3).size() == 1);
  CHECK(count_by_enumeration(2, 3, 9, Mode::NonNegative) == 6);
  CHECK(count_by_enumeration(2, 3, 1, Mode::NonNegative) == 3);
}

TEST_CASE("non-example: 5 must not be stripped for squares") {
  CHECK(count_by_enumeration(2, 2, 25, Mode::NonNegative) == 4);
  CHECK(count_by_enumeration(2, 2, 1, Mode::NonNegative) == 2);
  CHECK(reduce(Equation(2, 2, 1, 5)).result().c() == 5);
}

TEST_CASE("descent step") {
  for (std::uint64_t b = 0; b <= 20; ++b) {
    CHECK(verify_descent_step(4, 7, b, 2, 1));
    CHECK(verify_descent_step(6, 3, b, 3, 1));
    CHECK(verify_descent_step(2, 2, b, 3, 2));
  }
  CHECK_THROWS_AS(verify_descent_step(2, 2, 1, 5, 1), std::invalid_argument);
  CHECK_THROWS_AS(verify_descent_step(4, 8, 1, 2, 1), std::invalid_argument);
  CHECK_THROWS_AS(verify_descent_step(4, 7, 1, 2, 0), std::invalid_argument);
}
