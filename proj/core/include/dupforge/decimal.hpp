#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace dupforge {

// Exact decimal number: mantissa * 10^exponent with a normalized mantissa
// (no trailing zeros, zero has exponent 0). Stored values use this instead
// of binary floats so serialized output is byte-identical across platforms.
class Decimal {
 public:
  Decimal() = default;

  static Decimal from_int(std::int64_t value) { return Decimal(value, 0); }

  // Accepts plain and scientific notation ("-12.50", "1e6"). Rejects text
  // that does not round-trip as a decimal (empty, stray characters,
  // mantissas beyond 18 significant digits, |exponent| > 64).
  static std::optional<Decimal> parse(std::string_view text);

  // Canonical plain-notation rendering ("12.5", "-0.03", "100000").
  std::string to_string() const;

  double to_double() const;

  std::int64_t mantissa() const { return mantissa_; }
  std::int32_t exponent() const { return exponent_; }

  bool is_zero() const { return mantissa_ == 0; }
  bool is_integer() const { return exponent_ >= 0; }

  // Exact integer value if representable without loss.
  std::optional<std::int64_t> to_int() const;

  friend bool operator==(const Decimal& a, const Decimal& b) {
    return a.mantissa_ == b.mantissa_ && a.exponent_ == b.exponent_;
  }
  friend std::strong_ordering operator<=>(const Decimal& a, const Decimal& b);

 private:
  Decimal(std::int64_t mantissa, std::int32_t exponent);

  std::int64_t mantissa_ = 0;
  std::int32_t exponent_ = 0;
};

}  // namespace dupforge
