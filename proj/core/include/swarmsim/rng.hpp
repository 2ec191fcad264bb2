#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace swarmsim {

// SplitMix64 avalanche step. Used for seed derivation.
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Random stream for one simulation run.
//
// The engine is std::mt19937_64, which is bit-exact by the standard. The
// distributions are implemented here instead of via <random> distribution
// objects because those are implementation-defined and would break replay
// across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  // Unbiased uniform integer in [0, n); n >= 1. Rejection sampling.
  std::uint64_t uniform_below(std::uint64_t n) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t x = engine_();
    while (x >= limit) x = engine_();
    return x % n;
  }

  // Uniform real in [0, 1), 53-bit resolution.
  double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  // Uniform real in [-1, 1).
  double uniform_pm1() { return -1.0 + 2.0 * uniform01(); }

  // Normal draw via Box-Muller; consumes exactly two engine outputs.
  double normal(double mean, double sd) {
    const double u1 = 1.0 - uniform01();  // (0, 1], keeps the log finite
    const double u2 = uniform01();
    const double r = std::sqrt(-2.0 * std::log(u1));
    return mean + sd * r * std::cos(kTwoPi * u2);
  }

 private:
  static constexpr double kTwoPi = 6.283185307179586476925286766559;
  std::mt19937_64 engine_;
};

}  // namespace swarmsim
