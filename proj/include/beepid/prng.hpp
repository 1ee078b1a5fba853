#pragma once

#include <cstdint>
#include <initializer_list>
#include <limits>
#include <utility>

namespace beepid {

/// SplitMix64 generator. The output sequence is a pure function of the seed,
/// so transmitter and receiver can replay the same stream from a device id.
///
/// Satisfies UniformRandomBitGenerator and can drive <random> distributions.
class Prng {
 public:
  using result_type = std::uint64_t;

  constexpr explicit Prng(std::uint64_t seed = 0) noexcept : state_(seed) {}

  constexpr std::uint64_t next() noexcept {
    state_ += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  constexpr std::uint64_t operator()() noexcept { return next(); }

  /// Uniform double in [0, 1) from the top 53 bits.
  double uniform() noexcept { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  constexpr std::uint64_t state() const noexcept { return state_; }

  static constexpr result_type min() noexcept { return 0; }
  static constexpr result_type max() noexcept {
    return std::numeric_limits<result_type>::max();
  }

  friend constexpr bool operator==(const Prng&, const Prng&) = default;

 private:
  std::uint64_t state_;
};

/// Value-style step: returns the advanced generator and the emitted word.
constexpr std::pair<Prng, std::uint64_t> prng_next(Prng prng) noexcept {
  const std::uint64_t word = prng.next();
  return {prng, word};
}

/// Folds a list of words into one seed by chaining SplitMix64 finalizations.
/// Distinct inputs give independent-looking streams without coordination.
constexpr std::uint64_t derive_seed(std::initializer_list<std::uint64_t> words) noexcept {
  Prng mixer(0x6a09e667f3bcc909ULL);
  std::uint64_t acc = mixer.next();
  for (std::uint64_t w : words) {
    Prng step(acc ^ w);
    acc = step.next();
  }
  return acc;
}

}  // namespace beepid
