#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "dupforge/common.hpp"

namespace dupforge {

// Insert-only open-addressing set of 64-bit keys. Used for value
// reservations and distinct counting, where a plain unordered_set's
// per-node overhead dominates peak memory.
class FlatSet64 {
 public:
  explicit FlatSet64(std::size_t expected = 16) { rehash(capacity_for(expected)); }

  // Returns true if the key was newly inserted.
  bool insert(std::uint64_t key) {
    if ((size_ + 1) * 10 >= slots_.size() * 7) rehash(slots_.size() * 2);
    std::size_t mask = slots_.size() - 1;
    std::size_t i = static_cast<std::size_t>(mix64(key)) & mask;
    while (slots_[i] != kEmpty) {
      if (slots_[i] == normalize(key)) return false;
      i = (i + 1) & mask;
    }
    slots_[i] = normalize(key);
    ++size_;
    return true;
  }

  bool contains(std::uint64_t key) const {
    std::size_t mask = slots_.size() - 1;
    std::size_t i = static_cast<std::size_t>(mix64(key)) & mask;
    while (slots_[i] != kEmpty) {
      if (slots_[i] == normalize(key)) return true;
      i = (i + 1) & mask;
    }
    return false;
  }

  std::size_t size() const { return size_; }

 private:
  // One sentinel slot value; keys equal to it are remapped.
  static constexpr std::uint64_t kEmpty = 0xffffffffffffffffULL;

  static std::uint64_t normalize(std::uint64_t key) {
    return key == kEmpty ? 0xfffffffffffffffeULL : key;
  }

  static std::size_t capacity_for(std::size_t expected) {
    std::size_t cap = 16;
    while (cap * 7 < expected * 10) cap *= 2;
    return cap;
  }

  void rehash(std::size_t new_capacity) {
    std::vector<std::uint64_t> old = std::move(slots_);
    slots_.assign(new_capacity, kEmpty);
    std::size_t mask = slots_.size() - 1;
    for (std::uint64_t key : old) {
      if (key == kEmpty) continue;
      std::size_t i = static_cast<std::size_t>(mix64(key)) & mask;
      while (slots_[i] != kEmpty) i = (i + 1) & mask;
      slots_[i] = key;
    }
  }

  std::vector<std::uint64_t> slots_;
  std::size_t size_ = 0;
};

}  // namespace dupforge
