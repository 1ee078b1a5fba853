#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <vector>

namespace beepid {

struct Position {
  double x = 0.0;
  double y = 0.0;
};

double distance_m(Position a, Position b) noexcept;

/// Link-budget and propagation constants. Defaults: 10 uW transmitter,
/// -104 dBm carrier-sense sensitivity, 8 dB shadowing, log-distance pathloss
/// (free-space 1 m reference at 2.4 GHz, exponent 3) over a 100 m square,
/// 10 ms slots.
struct ChannelConfig {
  double tx_power_dbm = -20.0;
  double sensitivity_dbm = -104.0;
  double shadow_std_db = 8.0;
  double carrier_hz = 2.4e9;
  double pathloss_exponent = 3.0;
  double pathloss_ref_db = 40.05;
  double area_m = 100.0;
  double slot_s = 0.010;
  double velocity_kmph = 3.0;
  double interference_rate = 0.0;

  /// Throws std::invalid_argument when a field is out of range.
  void validate() const;
};

/// Radio state of one transmitter as seen from the receiver.
struct NodeRadio {
  Position position;
  double shadow_db = 0.0;
  std::complex<double> rayleigh_gain{1.0, 0.0};
  double velocity_kmph = 0.0;
};

struct SlotOutcome {
  std::vector<bool> per_node_detected;
  bool interference_on = false;
  bool union_bit = false;
};

inline constexpr double kSpeedOfLight = 2.99792458e8;

/// Log-distance pathloss with distances clamped to the 1 m reference.
double pathloss_db(double distance_m, const ChannelConfig& cfg);

/// AR(1) step of a unit-power complex Gaussian process:
/// rho * gain + sqrt(1 - rho^2) * noise, where noise ~ CN(0, 1).
std::complex<double> advance_rayleigh(std::complex<double> gain, double rho,
                                      std::complex<double> noise);

/// Slot-to-slot fading correlation J0(2 pi f_d dt), clamped to [0, 1].
double doppler_correlation(double velocity_kmph, double carrier_hz, double slot_s);

/// Instantaneous received power of one node in dBm.
double received_power_dbm(const NodeRadio& radio, Position rx, const ChannelConfig& cfg);

/// Whether a beep from `radio` clears the receiver sensitivity right now.
bool beep_detectable(const NodeRadio& radio, Position rx, const ChannelConfig& cfg);

/// Carrier-sense decision for one slot. A node is detected iff it beeps and its
/// received power reaches the sensitivity; interference saturates the slot.
SlotOutcome detect_slot(const std::vector<bool>& active_beeps, std::span<const NodeRadio> radios,
                        Position rx, const ChannelConfig& cfg, bool interference_on);

/// CN(0, 1) sampler: independent real and imaginary parts of variance 1/2.
class ComplexGaussian {
 public:
  template <class Engine>
  std::complex<double> operator()(Engine& engine) {
    const double re = normal_(engine);
    const double im = normal_(engine);
    return {re, im};
  }

 private:
  std::normal_distribution<double> normal_{0.0, 0.70710678118654752440};
};

}  // namespace beepid
