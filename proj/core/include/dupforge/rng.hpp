#pragma once

#include <cmath>
#include <cstdint>
#include <string_view>

#include "dupforge/common.hpp"

namespace dupforge {

// Counter-based random stream. Every stochastic decision in the generator
// draws from a stream keyed by (seed, tags...), so outcomes are independent
// of evaluation order and worker count. All generation algorithms are
// self-contained; nothing here depends on libstdc++ distribution internals,
// which keeps sequences identical across platforms and compilers.
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed) : key_(mix64(seed ^ 0x6170706c65736175ULL)) {}

  RandomStream derive(std::string_view tag) const {
    return RandomStream(mix64(key_ ^ fnv1a64(tag)), 0);
  }
  RandomStream derive(std::uint64_t tag) const {
    return RandomStream(mix64(key_ ^ fnv1a64(tag)), 0);
  }
  RandomStream derive(std::int64_t tag) const {
    return derive(static_cast<std::uint64_t>(tag));
  }

  std::uint64_t next_u64() { return mix64(key_ ^ mix64(counter_++)); }

  // Uniform in [0, 1).
  double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  // Uniform in [0, n); n must be positive. Multiply-shift reduction: a fixed
  // tiny bias (< 2^-64) is accepted in exchange for a division-free,
  // platform-stable mapping.
  std::uint64_t uniform(std::uint64_t n) {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(next_u64()) * n) >> 64);
  }

  // Uniform in [lo, hi] inclusive.
  std::int64_t uniform_range(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(
                    uniform(static_cast<std::uint64_t>(hi - lo) + 1));
  }

  bool bernoulli(double p) {
    if (p <= 0.0) return false;
    if (p >= 1.0) return true;
    return next_double() < p;
  }

  // Knuth sampling for small lambda, normal approximation beyond; generation
  // rates keep per-entity lambdas small.
  std::int64_t poisson(double lambda) {
    if (lambda <= 0.0) return 0;
    if (lambda < 30.0) {
      const double limit = std::exp(-lambda);
      std::int64_t k = 0;
      double product = next_double();
      while (product > limit) {
        ++k;
        product *= next_double();
      }
      return k;
    }
    const double u = next_double();
    const double g = std::sqrt(-2.0 * std::log(1.0 - u)) *
                     std::cos(6.283185307179586 * next_double());
    const double v = lambda + std::sqrt(lambda) * g;
    return v < 0.0 ? 0 : static_cast<std::int64_t>(v + 0.5);
  }

  // Number of failures before the first success, success probability p.
  std::int64_t geometric(double p) {
    if (p >= 1.0) return 0;
    if (p <= 0.0) return 0;
    std::int64_t k = 0;
    while (k < 64 && !bernoulli(p)) ++k;
    return k;
  }

 private:
  RandomStream(std::uint64_t key, std::uint64_t counter) : key_(key), counter_(counter) {}

  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

}  // namespace dupforge
