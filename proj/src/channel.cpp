#include "beepid/channel.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace beepid {

double distance_m(Position a, Position b) noexcept { return std::hypot(a.x - b.x, a.y - b.y); }

void ChannelConfig::validate() const {
  if (!(sensitivity_dbm < tx_power_dbm)) {
    throw std::invalid_argument("sensitivity_dbm must be below tx_power_dbm");
  }
  if (!(slot_s > 0.0)) throw std::invalid_argument("slot_s must be positive");
  if (!(interference_rate >= 0.0 && interference_rate <= 1.0)) {
    throw std::invalid_argument("interference_rate must lie in [0, 1]");
  }
  if (!(shadow_std_db >= 0.0)) throw std::invalid_argument("shadow_std_db must be non-negative");
  if (!(carrier_hz > 0.0)) throw std::invalid_argument("carrier_hz must be positive");
  if (!(area_m > 0.0)) throw std::invalid_argument("area_m must be positive");
  if (!(velocity_kmph >= 0.0)) throw std::invalid_argument("velocity_kmph must be non-negative");
}

double pathloss_db(double distance, const ChannelConfig& cfg) {
  return cfg.pathloss_ref_db + 10.0 * cfg.pathloss_exponent * std::log10(std::max(distance, 1.0));
}

std::complex<double> advance_rayleigh(std::complex<double> gain, double rho,
                                      std::complex<double> noise) {
  return rho * gain + std::sqrt(1.0 - rho * rho) * noise;
}

double doppler_correlation(double velocity_kmph, double carrier_hz, double slot_s) {
  const double wavelength = kSpeedOfLight / carrier_hz;
  const double doppler_hz = (velocity_kmph / 3.6) / wavelength;
  const double arg = 2.0 * std::numbers::pi * doppler_hz * slot_s;
  return std::clamp(std::cyl_bessel_j(0.0, arg), 0.0, 1.0);
}

double received_power_dbm(const NodeRadio& radio, Position rx, const ChannelConfig& cfg) {
  // 20 log10 of a zero envelope is -inf, which fails any finite sensitivity.
  return cfg.tx_power_dbm - pathloss_db(distance_m(radio.position, rx), cfg) + radio.shadow_db +
         20.0 * std::log10(std::abs(radio.rayleigh_gain));
}

bool beep_detectable(const NodeRadio& radio, Position rx, const ChannelConfig& cfg) {
  return received_power_dbm(radio, rx, cfg) >= cfg.sensitivity_dbm;
}

SlotOutcome detect_slot(const std::vector<bool>& active_beeps, std::span<const NodeRadio> radios,
                        Position rx, const ChannelConfig& cfg, bool interference_on) {
  if (active_beeps.size() != radios.size()) {
    throw std::invalid_argument("beep flags and radios must be aligned");
  }
  SlotOutcome out;
  out.per_node_detected.resize(radios.size(), false);
  out.interference_on = interference_on;
  bool any = false;
  for (std::size_t i = 0; i < radios.size(); ++i) {
    if (active_beeps[i] && beep_detectable(radios[i], rx, cfg)) {
      out.per_node_detected[i] = true;
      any = true;
    }
  }
  out.union_bit = any || interference_on;
  return out;
}

}  // namespace beepid
