#include "k2free/bitset.hpp"

namespace k2free {

void Bitset::set_all() noexcept {
  for (auto& w : words_) w = ~Word{0};
  const std::size_t tail = bits_ % kWordBits;
  if (tail != 0 && !words_.empty()) words_.back() = (Word{1} << tail) - 1;
}

std::size_t Bitset::find_next(std::size_t from) const noexcept {
  if (from >= bits_) return bits_;
  std::size_t wi = from / kWordBits;
  Word w = words_[wi] & (~Word{0} << (from % kWordBits));
  while (true) {
    if (w != 0) return wi * kWordBits + static_cast<std::size_t>(std::countr_zero(w));
    if (++wi >= words_.size()) return bits_;
    w = words_[wi];
  }
}

}  // namespace k2free
