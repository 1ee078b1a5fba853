#include "beepid/identify.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace beepid {

bool IdSet::contains(DeviceId id) const noexcept {
  return std::find(identified.begin(), identified.end(), id) != identified.end();
}

IdSet identify(const ChannelTrace& trace, std::span<const DeviceId> candidates, double p,
               std::size_t period_slots) {
  if (trace.size() != period_slots) {
    throw std::invalid_argument("trace has " + std::to_string(trace.size()) +
                                " slots, period has " + std::to_string(period_slots));
  }
  IdSet out;
  out.candidates.assign(candidates.begin(), candidates.end());
  for (DeviceId id : candidates) {
    // Each candidate gets a fresh stream, so stopping at the first uncovered
    // beep cannot change any other candidate's verdict.
    if (generate_pattern(id, p, period_slots).slots().is_subset_of(trace)) {
      out.identified.push_back(id);
    }
  }
  return out;
}

FilterWindow::FilterWindow(std::size_t window_len) : window_len_(window_len) {
  if (window_len == 0) throw std::invalid_argument("filter window length must be positive");
}

void FilterWindow::push(ChannelTrace trace) {
  if (!traces_.empty() && traces_.front().size() != trace.size()) {
    throw std::invalid_argument("trace length does not match the filter window");
  }
  if (full()) traces_.pop_front();
  traces_.push_back(std::move(trace));
}

ChannelTrace FilterWindow::apply() const {
  if (traces_.empty()) throw std::logic_error("cannot filter an empty window");
  ChannelTrace merged = traces_.front();
  for (std::size_t i = 1; i < traces_.size(); ++i) merged |= traces_[i];
  return merged;
}

FilterWindow filter_push(FilterWindow window, ChannelTrace trace) {
  window.push(std::move(trace));
  return window;
}

ChannelTrace filter_apply(const FilterWindow& window) { return window.apply(); }

}  // namespace beepid
