#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>

namespace football {

// Counter-based generator: the output for draw n is splitmix64(key + n * gamma).
// Copies are independent and replay the same stream.
class DeterministicRng {
 public:
  static constexpr std::uint64_t kGamma = 0x9e3779b97f4a7c15ULL;

  constexpr DeterministicRng() = default;
  constexpr explicit DeterministicRng(std::uint64_t seed) : key_(mix(seed ^ 0x5851f42d4c957f2dULL)) {}

  constexpr std::uint64_t next_u64() {
    counter_ += 1;
    return mix(key_ + counter_ * kGamma);
  }

  // Uniform in [0, 1) with 53 bits of precision.
  constexpr double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double normal() {
    // Box-Muller, one value per call so the draw count stays predictable.
    double u1 = uniform();
    const double u2 = uniform();
    if (u1 < 1e-300) u1 = 1e-300;
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
  }

  // Independent child stream; does not advance this generator.
  [[nodiscard]] constexpr DeterministicRng split(std::uint64_t stream) const {
    DeterministicRng child;
    child.key_ = mix(key_ ^ mix(stream + kGamma));
    return child;
  }

  [[nodiscard]] constexpr std::uint64_t key() const { return key_; }
  [[nodiscard]] constexpr std::uint64_t counter() const { return counter_; }

  friend constexpr bool operator==(const DeterministicRng&, const DeterministicRng&) = default;

 private:
  static constexpr std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  std::uint64_t key_ = 0;
  std::uint64_t counter_ = 0;
};

}  // namespace football
