#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <string_view>

namespace dupforge {

// Opaque identifiers. EntityId names one real-world entity, RecordId one
// emitted record within one source, SourceId one generated data source.
using EntityId = std::int64_t;
using RecordId = std::int64_t;
using SourceId = std::int64_t;

// Marker for records that are not linked to any real-world entity.
inline constexpr EntityId kSpuriousEntity = -1;

// Abstract simulation time. Tick 0 is the history start; intervals over
// timestamps are half-open [from, to).
struct Timestamp {
  std::int64_t tick = 0;

  friend constexpr auto operator<=>(const Timestamp&, const Timestamp&) = default;
};

// Open end of a validity interval ("still valid").
inline constexpr Timestamp kOpenEnd{std::numeric_limits<std::int64_t>::max()};

inline constexpr Timestamp kEpoch{0};

// Error with a stable machine-readable code. The CLI turns these into JSON
// diagnostics; library callers can switch on code().
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& message)
      : std::runtime_error(message), code_(std::move(code)) {}

  const std::string& code() const { return code_; }

 private:
  std::string code_;
};

[[noreturn]] inline void raise(std::string code, const std::string& message) {
  throw Error(std::move(code), message);
}

// --- hashing -------------------------------------------------------------

inline constexpr std::uint64_t kFnvOffset = 0xcbf29ce484222325ULL;
inline constexpr std::uint64_t kFnvPrime = 0x100000001b3ULL;

constexpr std::uint64_t fnv1a64(std::string_view data, std::uint64_t h = kFnvOffset) {
  for (unsigned char c : data) {
    h ^= c;
    h *= kFnvPrime;
  }
  return h;
}

constexpr std::uint64_t fnv1a64(std::uint64_t value, std::uint64_t h = kFnvOffset) {
  for (int i = 0; i < 8; ++i) {
    h ^= (value >> (i * 8)) & 0xff;
    h *= kFnvPrime;
  }
  return h;
}

// splitmix64 finalizer; good avalanche for key derivation.
constexpr std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::string to_hex(std::uint64_t value);

}  // namespace dupforge
