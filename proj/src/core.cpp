#include "powersum/core.hpp"

#include <limits>

namespace powersum {

std::string_view to_string(Mode mode) {
  return mode == Mode::Natural ? "natural" : "non-negative";
}

BigInt parse_decimal(std::string_view text) {
  if (text.empty()) {
    throw std::invalid_argument("empty integer literal");
  }
  BigInt value = 0;
  for (char ch : text) {
    if (ch < '0' || ch > '9') {
      throw std::invalid_argument("malformed integer literal: " + std::string(text));
    }
    value *= 10;
    value += static_cast<unsigned>(ch - '0');
  }
  return value;
}

std::uint64_t to_u64(const BigInt& value) {
  if (value < 0 || value > std::numeric_limits<std::uint64_t>::max()) {
    throw std::out_of_range("value does not fit in 64 bits: " + value.str());
  }
  return value.convert_to<std::uint64_t>();
}

} // namespace powersum
