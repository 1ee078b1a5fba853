#include "beepid/fingerprint.hpp"

#include <cmath>
#include <stdexcept>

namespace beepid {

BeepThreshold beep_threshold(double p) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::invalid_argument("beep probability must lie in [0, 1]");
  }
  if (p == 1.0) return {0, true};
  // p < 1 so p * 2^64 < 2^64; ldexp is exact and the cast truncates (floor).
  return {static_cast<std::uint64_t>(std::ldexp(p, 64)), false};
}

BeepPattern generate_pattern(DeviceId id, double p, std::size_t period_slots) {
  const BeepThreshold cut = beep_threshold(p);
  if (period_slots == 0) {
    throw std::invalid_argument("period must span at least one slot");
  }
  Prng rng(id.value);
  SlotBits slots(period_slots);
  for (std::size_t i = 0; i < period_slots; ++i) {
    if (cut.beeps(rng.next())) slots.set(i);
  }
  return BeepPattern(std::move(slots));
}

}  // namespace beepid
