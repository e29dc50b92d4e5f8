#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "k2free/witness.hpp"

namespace k2free {

/// Fixed-width bitset sized at runtime. Used for adjacency rows and
/// membership masks in the component and universality scans.
class Bitset {
 public:
  using Word = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  Bitset() = default;
  explicit Bitset(std::size_t bits) : bits_(bits), words_((bits + kWordBits - 1) / kWordBits, 0) {}

  std::size_t size() const noexcept { return bits_; }
  std::size_t word_count() const noexcept { return words_.size(); }

  bool test(std::size_t i) const noexcept { return (words_[i / kWordBits] >> (i % kWordBits)) & 1U; }
  void set(std::size_t i) noexcept { words_[i / kWordBits] |= Word{1} << (i % kWordBits); }
  void reset(std::size_t i) noexcept { words_[i / kWordBits] &= ~(Word{1} << (i % kWordBits)); }
  void clear() noexcept {
    for (auto& w : words_) w = 0;
  }
  void set_all() noexcept;

  std::size_t count() const noexcept {
    std::size_t c = 0;
    for (Word w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  bool any() const noexcept {
    for (Word w : words_) {
      if (w != 0) return true;
    }
    return false;
  }
  bool none() const noexcept { return !any(); }

  bool intersects(const Bitset& other) const noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      if ((words_[i] & other.words_[i]) != 0) return true;
    }
    return false;
  }
  bool is_subset_of(const Bitset& other) const noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      if ((words_[i] & ~other.words_[i]) != 0) return false;
    }
    return true;
  }

  Bitset& operator&=(const Bitset& other) noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
    return *this;
  }
  Bitset& operator|=(const Bitset& other) noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
    return *this;
  }
  /// this &= ~other
  Bitset& subtract(const Bitset& other) noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
    return *this;
  }

  /// Lowest set bit at or after `from`, or size() if none.
  std::size_t find_next(std::size_t from) const noexcept;
  std::size_t find_first() const noexcept { return find_next(0); }

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t wi = 0; wi < words_.size(); ++wi) {
      Word w = words_[wi];
      while (w != 0) {
        const auto bit = static_cast<std::size_t>(std::countr_zero(w));
        f(static_cast<Vertex>(wi * kWordBits + bit));
        w &= w - 1;
      }
    }
  }

  const std::vector<Word>& words() const noexcept { return words_; }
  std::vector<Word>& words() noexcept { return words_; }

  friend bool operator==(const Bitset&, const Bitset&) = default;

 private:
  std::size_t bits_ = 0;
  std::vector<Word> words_;
};

}  // namespace k2free
