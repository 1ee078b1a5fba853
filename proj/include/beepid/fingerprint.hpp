#pragma once

#include <cstddef>
#include <cstdint>

#include "beepid/prng.hpp"
#include "beepid/slot_bits.hpp"

namespace beepid {

/// Opaque device identifier; also the seed of the device's beep stream.
struct DeviceId {
  std::uint64_t value = 0;
  friend constexpr auto operator<=>(const DeviceId&, const DeviceId&) = default;
};

/// Integer threshold for "rand(0,1) <= p": a draw u beeps iff u < threshold.
/// `always` is set for p == 1, which has no 64-bit threshold.
struct BeepThreshold {
  std::uint64_t threshold = 0;
  bool always = false;

  bool beeps(std::uint64_t draw) const noexcept { return always || draw < threshold; }
};

/// floor(p * 2^64), with p == 1 mapped to always-beep. Throws for p outside [0,1].
BeepThreshold beep_threshold(double p);

/// One period's beep schedule for a device. Slot t in [1, T] is bit t-1.
class BeepPattern {
 public:
  explicit BeepPattern(SlotBits slots) : slots_(std::move(slots)) {}

  std::size_t period_slots() const noexcept { return slots_.size(); }
  /// 1-indexed slot access.
  bool beeps_at(std::size_t t) const noexcept { return slots_.test(t - 1); }
  std::size_t beep_count() const noexcept { return slots_.count(); }
  const SlotBits& slots() const noexcept { return slots_; }

  friend bool operator==(const BeepPattern&, const BeepPattern&) = default;

 private:
  SlotBits slots_;
};

/// Replays the broadcast schedule of `id`: the generator is seeded with the id
/// and exactly one draw is consumed per slot, beep or not.
/// Throws std::invalid_argument for p outside [0,1] or period_slots == 0.
BeepPattern generate_pattern(DeviceId id, double p, std::size_t period_slots);

}  // namespace beepid
