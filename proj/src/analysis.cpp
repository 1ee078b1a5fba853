#include "beepid/analysis.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace beepid::analysis {
namespace {

void require_stations(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("number of stations must be at least 1");
}

void require_probability(double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("probability must lie in [0, 1]");
}

// (1 - x)^k via log1p so that tiny x with huge k keeps full precision.
double one_minus_pow(double x, double k) {
  if (k == 0.0) return 1.0;
  if (x >= 1.0) return 0.0;
  return std::exp(k * std::log1p(-x));
}

double solve_period(double base_loss, double target) {
  if (!(target > 0.0 && target <= 1.0)) {
    throw std::invalid_argument("target probability must lie in (0, 1]");
  }
  const double periods = std::log(target) / std::log1p(-base_loss);
  return periods == 0.0 ? 0.0 : periods;  // no negative zero for target == 1
}

}  // namespace

double coverage_prob(std::uint64_t n, double p, std::uint64_t k) {
  require_stations(n);
  require_probability(p);
  const double silent_all = std::pow(1.0 - p, static_cast<double>(n));
  return one_minus_pow(silent_all, static_cast<double>(k));
}

double false_id_prob(std::uint64_t n, double p, std::uint64_t period_slots) {
  require_stations(n);
  require_probability(p);
  if (period_slots == 0) throw std::invalid_argument("period must span at least one slot");
  const double exposed = p * std::pow(1.0 - p, static_cast<double>(n));
  return one_minus_pow(exposed, static_cast<double>(period_slots));
}

double optimal_p(std::uint64_t n) {
  require_stations(n);
  return 1.0 / (static_cast<double>(n) + 1.0);
}

double default_target(std::uint64_t n) {
  require_stations(n);
  return 1.0 / static_cast<double>(n);
}

double optimal_T(std::uint64_t n) { return optimal_T(n, default_target(n)); }

double optimal_T(std::uint64_t n, double target) {
  require_stations(n);
  const double base_loss = 1.0 / (std::numbers::e * (static_cast<double>(n) + 1.0));
  return solve_period(base_loss, target);
}

double optimal_T_exact(std::uint64_t n) { return optimal_T_exact(n, default_target(n)); }

double optimal_T_exact(std::uint64_t n, double target) {
  const double p = optimal_p(n);
  const double base_loss = p * std::pow(1.0 - p, static_cast<double>(n));
  return solve_period(base_loss, target);
}

}  // namespace beepid::analysis
