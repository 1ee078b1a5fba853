#pragma once

#include <cstdint>

namespace beepid::analysis {

// Closed-form false-identification analysis for Bernoulli beep patterns.
//
// Setup: n transmitting stations each beep independently with probability p
// in each of T slots; the receiver sees the slot-wise union. A silent
// candidate with an independent pattern is falsely accepted when every one of
// its beeps falls on a covered slot.
//
//  * For one slot, "at least one of n stations beeps" has probability
//    1 - (1-p)^n.
//  * Given the candidate beeps in exactly k slots, all k are covered with
//    probability coverage_prob(n, p, k) = (1 - (1-p)^n)^k.
//  * The candidate's beep count Y ~ Binomial(T, p); mixing over Y gives
//    false_id_prob(n, p, T) = (1 - p(1-p)^n)^T.
//
// All functions throw std::invalid_argument on domain violations.

/// (1 - (1-p)^n)^k.
double coverage_prob(std::uint64_t n, double p, std::uint64_t k);

/// (1 - p(1-p)^n)^T.
double false_id_prob(std::uint64_t n, double p, std::uint64_t period_slots);

/// Beep probability minimizing false_id_prob for n stations: 1/(n+1).
double optimal_p(std::uint64_t n);

/// Real-valued period length T solving (1 - 1/(e(n+1)))^T = target.
/// Defaults to target = 1/n; returns 0 for n == 1 at the default target.
double optimal_T(std::uint64_t n);
double optimal_T(std::uint64_t n, double target);

/// Same as optimal_T but with the exact base 1 - p(1-p)^n at p = 1/(n+1).
double optimal_T_exact(std::uint64_t n);
double optimal_T_exact(std::uint64_t n, double target);

/// Default false-identification target, 1/n.
double default_target(std::uint64_t n);

}  // namespace beepid::analysis
