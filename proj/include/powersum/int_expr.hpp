#pragma once

#include <string_view>

#include "powersum/core.hpp"

namespace powersum {

/// Evaluates an exact integer expression such as "2^5*3^2" or "4^3*(8*2+7)".
/// Supports decimal literals, + - * ^ and parentheses; ^ binds tightest and
/// associates to the right. Throws std::invalid_argument on malformed input,
/// negative exponents or results that would be unreasonably large.
BigInt parse_integer_expression(std::string_view text);

} // namespace powersum
