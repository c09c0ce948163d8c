#pragma once

// Exact solution counting for sum_{i=1..m} x_i^n = d.
//
// Counts are of ordered m-tuples. Two independent algorithms are provided:
// a depth-first search over non-increasing tuples (expanded to ordered counts
// with a multinomial coefficient) and the convolution recurrence
// P_m(d) = sum_{x^n <= d} P_{m-1}(d - x^n), P_0(d) = [d == 0].

#include <cstdint>
#include <vector>

#include "powersum/core.hpp"

namespace powersum {

struct OracleBudget {
  /// Upper bound on search nodes for the depth-first enumeration.
  std::uint64_t node_limit = 100'000'000;
  /// Upper bound on stored cells of a convolution table.
  std::uint64_t table_entry_cap = 20'000'000;
  /// Upper bound on inner-loop steps of a convolution table build.
  std::uint64_t table_op_limit = 2'000'000'000;
};

enum class CountAlgorithm { Enumeration, Convolution };

struct CountResult {
  BigInt count;
  Mode mode = Mode::NonNegative;
  BigInt d;
  std::uint64_t n = 0;
  std::uint64_t m = 0;
  CountAlgorithm algorithm = CountAlgorithm::Enumeration;
};

/// Largest right-hand side the oracle will accept at all.
inline constexpr std::uint64_t oracle_rhs_limit = std::uint64_t{1} << 62;

/// Number of search nodes the enumeration would need in the worst case:
/// the number of non-increasing (m-1)-tuples over the admissible values.
BigInt enumeration_cost(std::uint64_t n, std::uint64_t m, std::uint64_t d, Mode mode);

/// True if count_solutions would run without raising BudgetExceeded.
bool within_budget(std::uint64_t n, std::uint64_t m, const BigInt& d, Mode mode,
                   const OracleBudget& budget = {});

/// Exact ordered count. Picks enumeration when its cost fits the node limit,
/// otherwise a rolling convolution table. Throws BudgetExceeded if neither fits.
CountResult count_solutions(std::uint64_t n, std::uint64_t m, const BigInt& d, Mode mode,
                            const OracleBudget& budget = {});

/// Depth-first enumeration with no budget check. m may be 0.
BigInt count_by_enumeration(std::uint64_t n, std::uint64_t m, std::uint64_t d, Mode mode);

/// Every ordered solution tuple, in lexicographic order. Throws
/// BudgetExceeded if there are more than max_count of them.
std::vector<std::vector<std::uint64_t>> list_solutions(std::uint64_t n, std::uint64_t m,
                                                       std::uint64_t d, Mode mode,
                                                       std::uint64_t max_count = 1000);

/// Convolution table for every m' <= m_max and d' <= d_max.
class CountTable {
public:
  std::uint64_t n() const { return n_; }
  Mode mode() const { return mode_; }
  std::uint64_t m_max() const { return m_max_; }
  std::uint64_t d_max() const { return d_max_; }

  /// Throws std::out_of_range outside the table.
  BigInt at(std::uint64_t m, std::uint64_t d) const;

private:
  friend CountTable count_table(std::uint64_t, std::uint64_t, std::uint64_t, Mode,
                                const OracleBudget&);
  std::uint64_t n_ = 0;
  Mode mode_ = Mode::NonNegative;
  std::uint64_t m_max_ = 0;
  std::uint64_t d_max_ = 0;
  // Rows stay in 64 bits unless some count overflows; then all rows are wide.
  std::vector<std::vector<std::uint64_t>> narrow_;
  std::vector<std::vector<BigInt>> wide_;
};

CountTable count_table(std::uint64_t n, std::uint64_t m_max, std::uint64_t d_max, Mode mode,
                       const OracleBudget& budget = {});

/// Checks P(b p^(ns)) == P(b p^(n(s-1))). Requires p to be a phi-divisor of n
/// of degree k with m <= p^k - 1, and s >= 1.
bool verify_descent_step(std::uint64_t n, std::uint64_t m, const BigInt& b, std::uint64_t p,
                         std::uint64_t s, Mode mode = Mode::NonNegative,
                         const OracleBudget& budget = {});

} // namespace powersum
