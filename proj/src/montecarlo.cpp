#include "beepid/montecarlo.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <random>
#include <set>
#include <stdexcept>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "beepid/identify.hpp"

namespace beepid {
namespace {

// Stream tags under a run seed.
constexpr std::uint64_t kLayoutStream = 1;
constexpr std::uint64_t kFadingStream = 2;
constexpr std::uint64_t kInterferenceStream = 3;

std::size_t whole_slots(double seconds, double slot_s) {
  return static_cast<std::size_t>(std::floor(seconds / slot_s + 1e-9));
}

}  // namespace

void SimConfig::validate() const {
  if (runs == 0) throw std::invalid_argument("runs must be positive");
  if (n_nodes == 0) throw std::invalid_argument("n_nodes must be positive");
  if (n_active > n_nodes) throw std::invalid_argument("n_active must not exceed n_nodes");
  if (!(slot_s > 0.0)) throw std::invalid_argument("slot_s must be positive");
  if (!(sim_length_s > 0.0)) throw std::invalid_argument("sim_length_s must be positive");
  if (period_ms.empty() || p.empty() || interference_rate.empty()) {
    throw std::invalid_argument("period_ms, p and interference_rate grids must be non-empty");
  }
  for (std::uint64_t t_ms : period_ms) {
    const double slots = static_cast<double>(t_ms) * 1e-3 / slot_s;
    if (t_ms == 0 || std::abs(slots - std::round(slots)) > 1e-9) {
      throw std::invalid_argument("period_ms " + std::to_string(t_ms) +
                                  " is not a positive multiple of the slot length");
    }
    if (period_slots(t_ms) > total_slots()) {
      throw std::invalid_argument("period_ms " + std::to_string(t_ms) +
                                  " exceeds sim_length_s");
    }
  }
  for (double v : p) {
    if (!(v >= 0.0 && v <= 1.0)) throw std::invalid_argument("p grid values must lie in [0, 1]");
  }
  for (double v : interference_rate) {
    if (!(v >= 0.0 && v <= 1.0)) {
      throw std::invalid_argument("interference_rate grid values must lie in [0, 1]");
    }
  }
  ChannelConfig effective = channel;
  effective.slot_s = slot_s;
  effective.validate();
}

std::size_t SimConfig::period_slots(std::uint64_t t_ms) const {
  return static_cast<std::size_t>(std::llround(static_cast<double>(t_ms) * 1e-3 / slot_s));
}

std::size_t SimConfig::total_slots() const { return whole_slots(sim_length_s, slot_s); }

double MetricsRecord::tp_rate() const noexcept {
  const std::uint64_t scored = tp + fn;
  return scored == 0 ? std::numeric_limits<double>::quiet_NaN()
                     : static_cast<double>(tp) / static_cast<double>(scored);
}

double MetricsRecord::tn_rate() const noexcept {
  const std::uint64_t scored = tn + fp;
  return scored == 0 ? std::numeric_limits<double>::quiet_NaN()
                     : static_cast<double>(tn) / static_cast<double>(scored);
}

MetricsRecord& MetricsRecord::merge(const MetricsRecord& other) noexcept {
  runs += other.runs;
  events += other.events;
  tp += other.tp;
  fn += other.fn;
  tn += other.tn;
  fp += other.fp;
  return *this;
}

RunLayout make_layout(const SimConfig& cfg, std::uint64_t run_seed) {
  Prng rng(derive_seed({run_seed, kLayoutStream}));
  RunLayout layout;
  layout.receiver = {cfg.channel.area_m / 2.0, cfg.channel.area_m / 2.0};

  std::set<std::uint64_t> seen;
  while (layout.roster.size() < cfg.n_nodes) {
    const std::uint64_t id = rng.next();
    if (seen.insert(id).second) layout.roster.push_back(DeviceId{id});
  }

  std::normal_distribution<double> shadow(0.0, cfg.channel.shadow_std_db);
  layout.radios.resize(cfg.n_nodes);
  for (NodeRadio& radio : layout.radios) {
    radio.position = {rng.uniform() * cfg.channel.area_m, rng.uniform() * cfg.channel.area_m};
    radio.shadow_db = cfg.channel.shadow_std_db > 0.0 ? shadow(rng) : 0.0;
    radio.velocity_kmph = cfg.channel.velocity_kmph;
  }
  return layout;
}

std::size_t scorable_periods(const SimConfig& cfg, const SimPoint& point) {
  const std::size_t periods = cfg.total_slots() / cfg.period_slots(point.period_ms);
  if (periods == 0) return 0;
  // A run shorter than the filter still yields one event over all its periods.
  const std::size_t window = std::clamp<std::size_t>(point.filter_len, 1, periods);
  return periods - window + 1;
}

MetricsRecord run_once(const SimConfig& cfg, const SimPoint& point, std::uint64_t run_seed) {
  ChannelConfig channel = cfg.channel;
  channel.slot_s = cfg.slot_s;
  channel.interference_rate = point.interference_rate;

  const std::size_t slots_per_period = cfg.period_slots(point.period_ms);
  const std::size_t periods = cfg.total_slots() / slots_per_period;
  const std::size_t active = cfg.n_active;

  RunLayout layout = make_layout(cfg, run_seed);

  std::vector<BeepPattern> patterns;
  patterns.reserve(active);
  for (std::size_t i = 0; i < active; ++i) {
    patterns.push_back(generate_pattern(layout.roster[i], point.p, slots_per_period));
  }

  // Every active node has its own fading stream, advanced once per slot
  // whether or not it beeps, so fades line up across p, IR and filter settings.
  const double rho = doppler_correlation(channel.velocity_kmph, channel.carrier_hz, channel.slot_s);
  std::vector<Prng> fading_rng;
  std::vector<ComplexGaussian> fading_noise(active);
  fading_rng.reserve(active);
  for (std::size_t i = 0; i < active; ++i) {
    fading_rng.emplace_back(derive_seed({run_seed, kFadingStream, i}));
    layout.radios[i].rayleigh_gain = fading_noise[i](fading_rng[i]);
  }

  Prng interference_rng(derive_seed({run_seed, kInterferenceStream}));
  const BeepThreshold interference = beep_threshold(point.interference_rate);

  MetricsRecord record;
  record.point = point;
  record.runs = 1;
  if (periods == 0) return record;

  const std::size_t window_len = std::clamp<std::size_t>(point.filter_len, 1, periods);
  FilterWindow window(window_len);

  for (std::size_t period = 0; period < periods; ++period) {
    ChannelTrace trace(slots_per_period);
    for (std::size_t slot = 0; slot < slots_per_period; ++slot) {
      bool sensed = interference.beeps(interference_rng.next());
      for (std::size_t i = 0; i < active; ++i) {
        NodeRadio& radio = layout.radios[i];
        if (!sensed && patterns[i].slots().test(slot) &&
            (cfg.ideal_channel || beep_detectable(radio, layout.receiver, channel))) {
          sensed = true;
        }
        radio.rayleigh_gain =
            advance_rayleigh(radio.rayleigh_gain, rho, fading_noise[i](fading_rng[i]));
      }
      if (sensed) trace.set(slot);
    }

    window.push(std::move(trace));
    if (!window.full()) continue;

    const IdSet result = identify(window.apply(), layout.roster, point.p, slots_per_period);
    ++record.events;
    for (std::size_t i = 0; i < layout.roster.size(); ++i) {
      const bool accepted = result.contains(layout.roster[i]);
      if (i < active) {
        ++(accepted ? record.tp : record.fn);
      } else {
        ++(accepted ? record.fp : record.tn);
      }
    }
  }
  return record;
}

std::uint64_t run_seed_for(std::uint64_t master_seed, const SimPoint& point,
                           std::uint64_t run_index) {
  return derive_seed(
      {master_seed, point.period_ms, std::bit_cast<std::uint64_t>(point.p), run_index});
}

std::vector<SimPoint> grid_points(const SimConfig& cfg) {
  std::vector<SimPoint> points;
  points.reserve(cfg.period_ms.size() * cfg.p.size() * cfg.interference_rate.size());
  for (std::uint64_t t_ms : cfg.period_ms) {
    for (double p : cfg.p) {
      for (double ir : cfg.interference_rate) {
        points.push_back({t_ms, p, ir, cfg.filter_len});
      }
    }
  }
  return points;
}

std::vector<MetricsRecord> sweep_serial(const SimConfig& cfg) {
  cfg.validate();
  std::vector<MetricsRecord> out;
  for (const SimPoint& point : grid_points(cfg)) {
    MetricsRecord total;
    total.point = point;
    for (std::uint64_t run = 0; run < cfg.runs; ++run) {
      total.merge(run_once(cfg, point, run_seed_for(cfg.master_seed, point, run)));
    }
    out.push_back(total);
  }
  return out;
}

std::vector<MetricsRecord> sweep(const SimConfig& cfg, int threads) {
  cfg.validate();
  const std::vector<SimPoint> points = grid_points(cfg);
  const auto runs = static_cast<std::int64_t>(cfg.runs);
  const auto tasks = static_cast<std::int64_t>(points.size()) * runs;

  std::vector<MetricsRecord> per_task(static_cast<std::size_t>(tasks));
#ifdef _OPENMP
  const int team = threads > 0 ? threads : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 4) num_threads(team)
#endif
  for (std::int64_t task = 0; task < tasks; ++task) {
    const SimPoint& point = points[static_cast<std::size_t>(task / runs)];
    const auto run = static_cast<std::uint64_t>(task % runs);
    per_task[static_cast<std::size_t>(task)] =
        run_once(cfg, point, run_seed_for(cfg.master_seed, point, run));
  }
  (void)threads;

  std::vector<MetricsRecord> out(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    out[i].point = points[i];
    for (std::int64_t run = 0; run < runs; ++run) {
      out[i].merge(per_task[i * static_cast<std::size_t>(runs) + static_cast<std::size_t>(run)]);
    }
  }
  return out;
}

std::vector<FilterComparison> compare_filtering(const SimConfig& cfg, int threads) {
  if (cfg.filter_len == 0) {
    throw std::invalid_argument("compare_filtering needs a positive filter_len");
  }
  SimConfig unfiltered = cfg;
  unfiltered.filter_len = 0;
  const std::vector<MetricsRecord> off = sweep(unfiltered, threads);
  const std::vector<MetricsRecord> on = sweep(cfg, threads);

  std::vector<FilterComparison> out;
  out.reserve(on.size());
  for (std::size_t i = 0; i < on.size(); ++i) {
    FilterComparison row;
    row.point = on[i].point;
    row.off = off[i];
    row.on = on[i];
    row.tp_gain = on[i].tp_rate() - off[i].tp_rate();
    row.tn_loss = off[i].tn_rate() - on[i].tn_rate();
    row.net = row.tp_gain - row.tn_loss;
    out.push_back(row);
  }
  return out;
}

}  // namespace beepid
