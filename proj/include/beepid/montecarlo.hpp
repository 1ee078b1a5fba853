#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "beepid/channel.hpp"
#include "beepid/fingerprint.hpp"

namespace beepid {

/// Full experiment parameterization. Grids are swept as a Cartesian product.
struct SimConfig {
  std::uint64_t runs = 50;
  double sim_length_s = 5.0;
  double slot_s = 0.010;
  std::vector<std::uint64_t> period_ms{50, 100, 150, 200, 500, 1000};
  std::uint64_t n_nodes = 10;
  std::uint64_t n_active = 5;
  std::vector<double> p{0.1, 0.2, 0.3, 0.4, 0.5};
  std::vector<double> interference_rate{0.0, 0.01, 0.02, 0.05, 0.1, 0.2};
  std::uint64_t filter_len = 0;  // 0 disables filtering
  ChannelConfig channel;
  bool ideal_channel = false;
  std::uint64_t master_seed = 1;

  /// Throws std::invalid_argument describing the first violated constraint.
  void validate() const;

  /// Slots per period for a grid value of period_ms.
  std::size_t period_slots(std::uint64_t period_ms) const;
  std::size_t total_slots() const;
};

/// One grid point.
struct SimPoint {
  std::uint64_t period_ms = 100;
  double p = 0.1;
  double interference_rate = 0.0;
  std::uint64_t filter_len = 0;

  friend bool operator==(const SimPoint&, const SimPoint&) = default;
};

/// TP/TN/FP/FN tallies for a grid point, summed over runs.
struct MetricsRecord {
  SimPoint point;
  std::uint64_t runs = 0;
  std::uint64_t events = 0;  // scored identification events (periods x runs)
  std::uint64_t tp = 0;
  std::uint64_t fn = 0;
  std::uint64_t tn = 0;
  std::uint64_t fp = 0;

  /// NaN when no active node was scored.
  double tp_rate() const noexcept;
  /// NaN when no silent node was scored.
  double tn_rate() const noexcept;

  /// Adds another record's counts; the point is left untouched.
  MetricsRecord& merge(const MetricsRecord& other) noexcept;

  friend bool operator==(const MetricsRecord&, const MetricsRecord&) = default;
};

/// Node drop for one run: roster ids, positions, shadowing and receiver spot.
struct RunLayout {
  std::vector<DeviceId> roster;  // first n_active entries transmit
  std::vector<NodeRadio> radios;
  Position receiver;
};

RunLayout make_layout(const SimConfig& cfg, std::uint64_t run_seed);

/// Number of periods a run is scored on after the filter warm-up.
std::size_t scorable_periods(const SimConfig& cfg, const SimPoint& point);

/// Simulates back-to-back periods of one run and scores every identification.
/// Deterministic in (cfg, point, run_seed).
MetricsRecord run_once(const SimConfig& cfg, const SimPoint& point, std::uint64_t run_seed);

/// Seed for run `run_index` at `point`. The interference rate and filter length
/// are deliberately not mixed in, so those axes are compared on paired runs.
std::uint64_t run_seed_for(std::uint64_t master_seed, const SimPoint& point,
                           std::uint64_t run_index);

/// Grid points in T-major, then p, then interference-rate order.
std::vector<SimPoint> grid_points(const SimConfig& cfg);

/// Single-threaded reference sweep.
std::vector<MetricsRecord> sweep_serial(const SimConfig& cfg);

/// OpenMP sweep over (point, run) pairs. `threads` <= 0 uses the OpenMP
/// default. Output is identical to sweep_serial for any thread count.
std::vector<MetricsRecord> sweep(const SimConfig& cfg, int threads = 0);

struct FilterComparison {
  SimPoint point;  // carries the filter length that was switched on
  MetricsRecord off;
  MetricsRecord on;
  double tp_gain = 0.0;  // tp_rate(on) - tp_rate(off)
  double tn_loss = 0.0;  // tn_rate(off) - tn_rate(on)
  double net = 0.0;      // tp_gain - tn_loss
};

/// Runs the sweep with filtering off and with cfg.filter_len, on the same seeds.
/// Throws std::invalid_argument if cfg.filter_len == 0.
std::vector<FilterComparison> compare_filtering(const SimConfig& cfg, int threads = 0);

}  // namespace beepid
