#pragma once

// Shared vocabulary for the powersum library: exact integers, the counting
// mode of an equation and the error types thrown across module boundaries.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace powersum {

using BigInt = boost::multiprecision::cpp_int;

/// Which tuples count as solutions: x_i >= 0 or x_i >= 1.
enum class Mode { NonNegative, Natural };

std::string_view to_string(Mode mode);

/// Raised when an operation would exceed its configured work or memory budget.
/// Distinct from std::invalid_argument so callers can report it separately.
class BudgetExceeded : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

inline std::string to_string(const BigInt& value) { return value.str(); }

/// Parses a non-negative decimal literal. Throws std::invalid_argument.
BigInt parse_decimal(std::string_view text);

/// Narrows to uint64, throwing std::out_of_range if the value does not fit.
std::uint64_t to_u64(const BigInt& value);

} // namespace powersum
