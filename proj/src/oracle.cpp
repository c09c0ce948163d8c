#include "powersum/oracle.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "powersum/numtheory.hpp"
#include "powersum/phidiv.hpp"

namespace powersum {

namespace mp = boost::multiprecision;

namespace {

using u128 = unsigned __int128;

struct Overflow {};

// x^n for x = 0..r, where r = floor(d^(1/n)).
std::vector<std::uint64_t> power_table(std::uint64_t n, std::uint64_t d) {
  const std::uint64_t r = integer_nth_root(d, static_cast<unsigned>(std::min<std::uint64_t>(n, 64)));
  std::vector<std::uint64_t> pw(r + 1);
  for (std::uint64_t x = 0; x <= r; ++x) {
    u128 v = 1;
    for (std::uint64_t i = 0; i < n && v <= d; ++i) v *= x;
    pw[x] = static_cast<std::uint64_t>(v);
  }
  if (n > 0) pw[0] = 0;
  return pw;
}

class Enumerator {
public:
  Enumerator(std::uint64_t n, std::uint64_t m, std::uint64_t d, Mode mode)
      : m_(m), lo_(mode == Mode::Natural ? 1 : 0), pw_(power_table(n, d)), path_(m) {
    factorial_.reserve(m + 1);
    factorial_.emplace_back(1);
    for (std::uint64_t i = 1; i <= m; ++i) factorial_.push_back(factorial_.back() * i);
  }

  BigInt run(std::uint64_t d) {
    total_ = 0;
    if (m_ == 0) return d == 0 ? 1 : 0;
    if (lo_ >= pw_.size()) return 0; // no admissible value at all
    descend(m_, d, pw_.size() - 1);
    return total_;
  }

private:
  // slots: positions still to fill; rem: remaining sum; cap: largest value allowed.
  void descend(std::uint64_t slots, std::uint64_t rem, std::uint64_t cap) {
    const std::uint64_t depth = m_ - slots;
    if (slots == 1) {
      auto first = pw_.begin() + static_cast<std::ptrdiff_t>(lo_);
      auto last = pw_.begin() + static_cast<std::ptrdiff_t>(cap) + 1;
      auto it = std::lower_bound(first, last, rem);
      if (it != last && *it == rem) {
        path_[depth] = static_cast<std::uint64_t>(it - pw_.begin());
        record();
      }
      return;
    }
    // Largest value whose power fits in rem.
    auto top = std::upper_bound(pw_.begin(), pw_.begin() + static_cast<std::ptrdiff_t>(cap) + 1, rem);
    std::uint64_t x = static_cast<std::uint64_t>(top - pw_.begin()) - 1;
    const u128 floor_rest = static_cast<u128>(slots - 1) * pw_[lo_];
    for (;; --x) {
      if (x < lo_) break;
      // With all later values <= x the sum is at most slots * x^n.
      if (static_cast<u128>(slots) * pw_[x] < rem) break;
      if (static_cast<u128>(rem - pw_[x]) >= floor_rest) {
        path_[depth] = x;
        descend(slots - 1, rem - pw_[x], x);
      }
      if (x == 0) break;
    }
  }

  void record() {
    BigInt ways = factorial_[m_];
    std::uint64_t run = 1;
    for (std::uint64_t i = 1; i <= m_; ++i) {
      if (i < m_ && path_[i] == path_[i - 1]) {
        ++run;
      } else {
        ways /= factorial_[run];
        run = 1;
      }
    }
    total_ += ways;
  }

  std::uint64_t m_;
  std::uint64_t lo_;
  std::vector<std::uint64_t> pw_;
  std::vector<std::uint64_t> path_;
  std::vector<BigInt> factorial_;
  BigInt total_;
};

template <class Count>
void add_into(Count& acc, const Count& v) {
  if constexpr (std::is_same_v<Count, std::uint64_t>) {
    if (__builtin_add_overflow(acc, v, &acc)) throw Overflow{};
  } else {
    acc += v;
  }
}

// Next row of the recurrence: next[d] = sum_{x >= lo, x^n <= d} prev[d - x^n].
template <class Count>
void convolve_row(const std::vector<Count>& prev, std::vector<Count>& next,
                  const std::vector<std::uint64_t>& pw, std::uint64_t lo) {
  const std::uint64_t d_max = prev.size() - 1;
  std::fill(next.begin(), next.end(), Count(0));
  for (std::uint64_t x = lo; x < pw.size(); ++x) {
    const std::uint64_t step = pw[x];
    for (std::uint64_t d = step; d <= d_max; ++d) {
      if (prev[d - step] != 0) add_into(next[d], prev[d - step]);
    }
  }
}

template <class Count>
std::vector<std::vector<Count>> build_rows(std::uint64_t n, std::uint64_t m_max,
                                           std::uint64_t d_max, Mode mode) {
  const auto pw = power_table(n, d_max);
  const std::uint64_t lo = mode == Mode::Natural ? 1 : 0;
  std::vector<std::vector<Count>> rows(m_max + 1, std::vector<Count>(d_max + 1, Count(0)));
  rows[0][0] = 1;
  for (std::uint64_t m = 1; m <= m_max; ++m) convolve_row(rows[m - 1], rows[m], pw, lo);
  return rows;
}

template <class Count>
Count rolling_count(std::uint64_t n, std::uint64_t m, std::uint64_t d, Mode mode) {
  const auto pw = power_table(n, d);
  const std::uint64_t lo = mode == Mode::Natural ? 1 : 0;
  std::vector<Count> prev(d + 1, Count(0)), next(d + 1, Count(0));
  prev[0] = 1;
  for (std::uint64_t i = 1; i <= m; ++i) {
    convolve_row(prev, next, pw, lo);
    std::swap(prev, next);
  }
  return prev[d];
}

std::uint64_t table_ops(std::uint64_t n, std::uint64_t rows, std::uint64_t d_max) {
  const u128 values = integer_nth_root(d_max, static_cast<unsigned>(std::min<std::uint64_t>(n, 64))) + 1;
  const u128 ops = values * (static_cast<u128>(d_max) + 1) * rows;
  return ops > std::numeric_limits<std::uint64_t>::max() ? std::numeric_limits<std::uint64_t>::max()
                                                         : static_cast<std::uint64_t>(ops);
}

bool table_fits(std::uint64_t n, std::uint64_t m, std::uint64_t d, const OracleBudget& budget) {
  const u128 entries = static_cast<u128>(d + 1) * 2;
  return entries <= budget.table_entry_cap && table_ops(n, m, d) <= budget.table_op_limit;
}

std::uint64_t require_oracle_rhs(const BigInt& d) {
  if (d < 0) throw std::invalid_argument("oracle: right-hand side must be non-negative");
  if (d > oracle_rhs_limit) {
    throw BudgetExceeded("oracle: right-hand side " + d.str() + " exceeds the oracle limit");
  }
  return d.convert_to<std::uint64_t>();
}

} // namespace

BigInt enumeration_cost(std::uint64_t n, std::uint64_t m, std::uint64_t d, Mode mode) {
  if (m <= 1) return 1;
  const std::uint64_t r = integer_nth_root(d, static_cast<unsigned>(std::min<std::uint64_t>(n, 64)));
  const std::uint64_t lo = mode == Mode::Natural ? 1 : 0;
  if (r < lo) return 1;
  // Multisets of size m-1 drawn from (r - lo + 1) values: C(v + m - 2, m - 1).
  const BigInt v = r - lo + 1;
  BigInt cost = 1;
  for (std::uint64_t i = 1; i <= m - 1; ++i) {
    cost = cost * (v + i - 1) / i;
  }
  return cost;
}

bool within_budget(std::uint64_t n, std::uint64_t m, const BigInt& d, Mode mode,
                   const OracleBudget& budget) {
  if (d < 0 || d > oracle_rhs_limit) return false;
  const auto dd = d.convert_to<std::uint64_t>();
  return enumeration_cost(n, m, dd, mode) <= budget.node_limit || table_fits(n, m, dd, budget);
}

BigInt count_by_enumeration(std::uint64_t n, std::uint64_t m, std::uint64_t d, Mode mode) {
  if (n == 0) throw std::invalid_argument("oracle: exponent must be positive");
  Enumerator e(n, m, d, mode);
  return e.run(d);
}

std::vector<std::vector<std::uint64_t>> list_solutions(std::uint64_t n, std::uint64_t m,
                                                       std::uint64_t d, Mode mode,
                                                       std::uint64_t max_count) {
  if (n == 0) throw std::invalid_argument("oracle: exponent must be positive");
  if (count_by_enumeration(n, m, d, mode) > max_count) {
    throw BudgetExceeded("oracle: more than " + std::to_string(max_count) + " solutions to list");
  }
  const auto pw = power_table(n, d);
  const std::uint64_t lo = mode == Mode::Natural ? 1 : 0;
  std::vector<std::vector<std::uint64_t>> out;
  std::vector<std::uint64_t> path;
  // Plain ordered search; only used once the count is known to be small.
  auto rec = [&](auto&& self, std::uint64_t slots, std::uint64_t rem) -> void {
    if (slots == 0) {
      if (rem == 0) out.push_back(path);
      return;
    }
    for (std::uint64_t x = lo; x < pw.size() && pw[x] <= rem; ++x) {
      if (slots == 1 && pw[x] != rem) continue;
      path.push_back(x);
      self(self, slots - 1, rem - pw[x]);
      path.pop_back();
    }
  };
  rec(rec, m, d);
  return out;
}

CountResult count_solutions(std::uint64_t n, std::uint64_t m, const BigInt& d, Mode mode,
                            const OracleBudget& budget) {
  if (n == 0) throw std::invalid_argument("oracle: exponent must be positive");
  const std::uint64_t dd = require_oracle_rhs(d);
  CountResult result{0, mode, d, n, m, CountAlgorithm::Enumeration};
  if (enumeration_cost(n, m, dd, mode) <= budget.node_limit) {
    result.count = count_by_enumeration(n, m, dd, mode);
    return result;
  }
  if (!table_fits(n, m, dd, budget)) {
    throw BudgetExceeded("oracle: counting sum of " + std::to_string(m) + " powers of degree " +
                         std::to_string(n) + " equal to " + d.str() + " exceeds the budget");
  }
  result.algorithm = CountAlgorithm::Convolution;
  try {
    result.count = rolling_count<std::uint64_t>(n, m, dd, mode);
  } catch (const Overflow&) {
    result.count = rolling_count<BigInt>(n, m, dd, mode);
  }
  return result;
}

BigInt CountTable::at(std::uint64_t m, std::uint64_t d) const {
  if (m > m_max_ || d > d_max_) throw std::out_of_range("CountTable::at: index outside table");
  if (!wide_.empty()) return wide_[m][d];
  return narrow_[m][d];
}

CountTable count_table(std::uint64_t n, std::uint64_t m_max, std::uint64_t d_max, Mode mode,
                       const OracleBudget& budget) {
  if (n == 0) throw std::invalid_argument("oracle: exponent must be positive");
  const u128 entries = static_cast<u128>(m_max + 1) * (static_cast<u128>(d_max) + 1);
  if (entries > budget.table_entry_cap || table_ops(n, m_max, d_max) > budget.table_op_limit) {
    throw BudgetExceeded("oracle: count table of " + std::to_string(m_max + 1) + " x " +
                         std::to_string(d_max + 1) + " exceeds the budget");
  }
  CountTable table;
  table.n_ = n;
  table.mode_ = mode;
  table.m_max_ = m_max;
  table.d_max_ = d_max;
  try {
    table.narrow_ = build_rows<std::uint64_t>(n, m_max, d_max, mode);
  } catch (const Overflow&) {
    table.narrow_.clear();
    table.wide_ = build_rows<BigInt>(n, m_max, d_max, mode);
  }
  return table;
}

bool verify_descent_step(std::uint64_t n, std::uint64_t m, const BigInt& b, std::uint64_t p,
                         std::uint64_t s, Mode mode, const OracleBudget& budget) {
  if (s == 0) throw std::invalid_argument("verify_descent_step: s must be positive");
  if (b < 0) throw std::invalid_argument("verify_descent_step: b must be non-negative");
  const auto pd = phi_divisor(p, n);
  if (!pd || m > pd->prime_power - 1) {
    throw std::invalid_argument("verify_descent_step: p is not an eligible phi-divisor of n");
  }
  const BigInt pn = mp::pow(BigInt(p), static_cast<unsigned>(n));
  const BigInt lower = b * mp::pow(pn, static_cast<unsigned>(s - 1));
  const BigInt upper = lower * pn;
  return count_solutions(n, m, upper, mode, budget).count ==
         count_solutions(n, m, lower, mode, budget).count;
}

} // namespace powersum
