#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace beepid {

/// Fixed-length packed bit vector, one bit per slot. Index 0 is slot 1.
class SlotBits {
 public:
  SlotBits() = default;
  explicit SlotBits(std::size_t length, bool value = false);

  /// Parses a string of '0'/'1' characters; throws std::invalid_argument otherwise.
  static SlotBits from_string(std::string_view bits);

  std::size_t size() const noexcept { return length_; }
  bool empty() const noexcept { return length_ == 0; }

  bool test(std::size_t index) const noexcept {
    return (words_[index >> 6] >> (index & 63)) & 1U;
  }
  void set(std::size_t index, bool value = true) noexcept {
    const std::uint64_t mask = std::uint64_t{1} << (index & 63);
    if (value) {
      words_[index >> 6] |= mask;
    } else {
      words_[index >> 6] &= ~mask;
    }
  }

  std::size_t count() const noexcept;
  bool none() const noexcept { return count() == 0; }
  bool all() const noexcept { return count() == length_; }

  /// True when every set bit of *this is also set in `other`. Lengths must match.
  bool is_subset_of(const SlotBits& other) const;

  SlotBits& operator|=(const SlotBits& other);
  friend SlotBits operator|(SlotBits lhs, const SlotBits& rhs) { return lhs |= rhs; }

  std::span<const std::uint64_t> words() const noexcept { return words_; }

  std::string to_string() const;

  friend bool operator==(const SlotBits&, const SlotBits&) = default;

 private:
  void require_same_length(const SlotBits& other) const;

  std::size_t length_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace beepid
