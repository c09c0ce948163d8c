#include "powersum/int_expr.hpp"

#include <cctype>
#include <string>

namespace powersum {

namespace {

// Results beyond this many bits are rejected rather than computed.
constexpr std::uint64_t max_result_bits = 1u << 22;

class Parser {
public:
  explicit Parser(std::string_view text) : text_(text) {}

  BigInt parse() {
    BigInt v = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected character");
    return v;
  }

private:
  BigInt expr() {
    BigInt v = term();
    for (;;) {
      skip_space();
      if (accept('+')) {
        v += term();
      } else if (accept('-')) {
        v -= term();
      } else {
        return v;
      }
    }
  }

  BigInt term() {
    BigInt v = power();
    for (;;) {
      skip_space();
      if (!accept('*')) return v;
      v *= power();
      check_size(v);
    }
  }

  BigInt power() {
    BigInt base = atom();
    skip_space();
    if (!accept('^')) return base;
    BigInt exp = power();
    if (exp < 0) fail("negative exponent");
    if (base == 0 || base == 1) return exp == 0 ? BigInt(1) : base;
    const std::uint64_t bits = boost::multiprecision::msb(abs(base)) + 1;
    if (exp > max_result_bits || bits * exp.convert_to<std::uint64_t>() > max_result_bits) {
      fail("power too large");
    }
    return boost::multiprecision::pow(base, exp.convert_to<unsigned>());
  }

  BigInt atom() {
    skip_space();
    if (accept('(')) {
      BigInt v = expr();
      skip_space();
      if (!accept(')')) fail("missing ')'");
      return v;
    }
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a number");
    return parse_decimal(text_.substr(start, pos_ - start));
  }

  void check_size(const BigInt& v) {
    if (v != 0 && boost::multiprecision::msb(abs(v)) > max_result_bits) fail("value too large");
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char ch) {
    if (pos_ < text_.size() && text_[pos_] == ch) {
      ++pos_;
      return true;
    }
    return false;
  }

  [[noreturn]] void fail(const char* what) const {
    throw std::invalid_argument("integer expression '" + std::string(text_) + "': " + what +
                                " at position " + std::to_string(pos_));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

} // namespace

BigInt parse_integer_expression(std::string_view text) { return Parser(text).parse(); }

} // namespace powersum
