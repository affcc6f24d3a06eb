#include "dupforge/decimal.hpp"

#include <cmath>
#include <cstdlib>
#include <limits>

namespace dupforge {

namespace {

constexpr std::int32_t kMaxExponent = 64;
constexpr int kMaxDigits = 18;

}  // namespace

Decimal::Decimal(std::int64_t mantissa, std::int32_t exponent)
    : mantissa_(mantissa), exponent_(exponent) {
  if (mantissa_ == 0) {
    exponent_ = 0;
    return;
  }
  while (mantissa_ % 10 == 0) {
    mantissa_ /= 10;
    ++exponent_;
  }
}

std::optional<Decimal> Decimal::parse(std::string_view text) {
  if (text.empty()) return std::nullopt;
  std::size_t i = 0;
  bool negative = false;
  if (text[i] == '-') {
    negative = true;
    ++i;
  }
  if (i >= text.size()) return std::nullopt;

  std::int64_t mantissa = 0;
  int digits = 0;
  std::int32_t exponent = 0;
  bool any_int = false, any_frac = false;

  auto push_digit = [&](char c) -> bool {
    if (digits >= kMaxDigits) return false;
    mantissa = mantissa * 10 + (c - '0');
    if (mantissa != 0 || c != '0') ++digits;
    return true;
  };

  while (i < text.size() && text[i] >= '0' && text[i] <= '9') {
    if (!push_digit(text[i])) return std::nullopt;
    any_int = true;
    ++i;
  }
  if (i < text.size() && text[i] == '.') {
    ++i;
    while (i < text.size() && text[i] >= '0' && text[i] <= '9') {
      if (!push_digit(text[i])) return std::nullopt;
      --exponent;
      any_frac = true;
      ++i;
    }
    if (!any_frac) return std::nullopt;
  }
  if (!any_int && !any_frac) return std::nullopt;

  if (i < text.size() && (text[i] == 'e' || text[i] == 'E')) {
    ++i;
    bool exp_negative = false;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
      exp_negative = text[i] == '-';
      ++i;
    }
    if (i >= text.size()) return std::nullopt;
    std::int64_t e = 0;
    while (i < text.size() && text[i] >= '0' && text[i] <= '9') {
      e = e * 10 + (text[i] - '0');
      if (e > 4 * kMaxExponent) return std::nullopt;
      ++i;
    }
    exponent += static_cast<std::int32_t>(exp_negative ? -e : e);
  }
  if (i != text.size()) return std::nullopt;
  if (exponent > kMaxExponent || exponent < -kMaxExponent) return std::nullopt;
  return Decimal(negative ? -mantissa : mantissa, exponent);
}

std::string Decimal::to_string() const {
  if (mantissa_ == 0) return "0";
  std::string digits = std::to_string(mantissa_ < 0 ? -mantissa_ : mantissa_);
  std::string out;
  if (mantissa_ < 0) out.push_back('-');
  if (exponent_ >= 0) {
    out += digits;
    out.append(static_cast<std::size_t>(exponent_), '0');
  } else {
    std::size_t frac = static_cast<std::size_t>(-exponent_);
    if (digits.size() > frac) {
      out += digits.substr(0, digits.size() - frac);
      out.push_back('.');
      out += digits.substr(digits.size() - frac);
    } else {
      out += "0.";
      out.append(frac - digits.size(), '0');
      out += digits;
    }
  }
  return out;
}

double Decimal::to_double() const {
  return static_cast<double>(mantissa_) * std::pow(10.0, exponent_);
}

std::optional<std::int64_t> Decimal::to_int() const {
  if (exponent_ < 0) return std::nullopt;
  std::int64_t v = mantissa_;
  for (std::int32_t i = 0; i < exponent_; ++i) {
    if (v > std::numeric_limits<std::int64_t>::max() / 10 ||
        v < std::numeric_limits<std::int64_t>::min() / 10) {
      return std::nullopt;
    }
    v *= 10;
  }
  return v;
}

namespace {

int digit_count(std::int64_t mantissa) {
  int n = 0;
  while (mantissa != 0) {
    mantissa /= 10;
    ++n;
  }
  return n;
}

}  // namespace

std::strong_ordering operator<=>(const Decimal& a, const Decimal& b) {
  if (a.mantissa_ == 0 || b.mantissa_ == 0 || (a.mantissa_ < 0) != (b.mantissa_ < 0)) {
    return a.mantissa_ <=> b.mantissa_;
  }
  const bool negative = a.mantissa_ < 0;
  // Same sign, both non-zero. Order of magnitude decides first; only equal
  // magnitudes need exponent alignment, which then fits in 128 bits.
  const int mag_a = digit_count(a.mantissa_) + a.exponent_;
  const int mag_b = digit_count(b.mantissa_) + b.exponent_;
  if (mag_a != mag_b) {
    return negative ? mag_b <=> mag_a : mag_a <=> mag_b;
  }
  __int128 ma = a.mantissa_, mb = b.mantissa_;
  std::int32_t ea = a.exponent_, eb = b.exponent_;
  while (ea > eb) {
    ma *= 10;
    --ea;
  }
  while (eb > ea) {
    mb *= 10;
    --eb;
  }
  if (ma < mb) return std::strong_ordering::less;
  if (ma > mb) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

}  // namespace dupforge
