#pragma once

#include <cstddef>
#include <deque>
#include <span>
#include <vector>

#include "beepid/fingerprint.hpp"
#include "beepid/slot_bits.hpp"

namespace beepid {

/// Per-slot carrier-sense observation at the receiver; 1 = energy sensed.
using ChannelTrace = SlotBits;

struct IdSet {
  std::vector<DeviceId> candidates;
  std::vector<DeviceId> identified;  // subset of candidates, in candidate order

  bool contains(DeviceId id) const noexcept;
};

/// Accepts every candidate whose regenerated pattern is covered by the trace.
/// Throws std::invalid_argument if trace.size() != period_slots.
IdSet identify(const ChannelTrace& trace, std::span<const DeviceId> candidates, double p,
               std::size_t period_slots);

/// Sliding window of the last m traces; the receiver ORs them slot-wise
/// before identification so a single deep fade no longer hides a beep.
class FilterWindow {
 public:
  explicit FilterWindow(std::size_t window_len);

  std::size_t capacity() const noexcept { return window_len_; }
  std::size_t size() const noexcept { return traces_.size(); }
  bool full() const noexcept { return traces_.size() == window_len_; }
  const std::deque<ChannelTrace>& traces() const noexcept { return traces_; }

  /// Appends a trace, evicting the oldest when at capacity.
  void push(ChannelTrace trace);
  /// Slot-wise OR of the held traces. Throws std::logic_error when empty.
  ChannelTrace apply() const;

 private:
  std::size_t window_len_;
  std::deque<ChannelTrace> traces_;
};

/// Value-style wrappers over FilterWindow.
FilterWindow filter_push(FilterWindow window, ChannelTrace trace);
ChannelTrace filter_apply(const FilterWindow& window);

}  // namespace beepid
