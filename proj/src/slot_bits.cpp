#include "beepid/slot_bits.hpp"

#include <bit>
#include <stdexcept>

namespace beepid {

SlotBits::SlotBits(std::size_t length, bool value)
    : length_(length), words_((length + 63) / 64, value ? ~std::uint64_t{0} : 0) {
  // Keep padding bits clear so word-level compares and popcounts stay exact.
  if (value && (length & 63) != 0) {
    words_.back() &= (std::uint64_t{1} << (length & 63)) - 1;
  }
}

SlotBits SlotBits::from_string(std::string_view bits) {
  SlotBits out(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1') {
      out.set(i);
    } else if (bits[i] != '0') {
      throw std::invalid_argument("slot bit string may contain only '0' and '1'");
    }
  }
  return out;
}

std::size_t SlotBits::count() const noexcept {
  std::size_t total = 0;
  for (std::uint64_t w : words_) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

void SlotBits::require_same_length(const SlotBits& other) const {
  if (length_ != other.length_) {
    throw std::invalid_argument("slot vectors differ in length: " + std::to_string(length_) +
                                " vs " + std::to_string(other.length_));
  }
}

bool SlotBits::is_subset_of(const SlotBits& other) const {
  require_same_length(other);
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if ((words_[i] & ~other.words_[i]) != 0) return false;
  }
  return true;
}

SlotBits& SlotBits::operator|=(const SlotBits& other) {
  require_same_length(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

std::string SlotBits::to_string() const {
  std::string s(length_, '0');
  for (std::size_t i = 0; i < length_; ++i) {
    if (test(i)) s[i] = '1';
  }
  return s;
}

}  // namespace beepid
