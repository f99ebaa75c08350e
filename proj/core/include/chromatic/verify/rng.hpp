#pragma once

#include <cstdint>

namespace chromatic::verify {

// SplitMix64: state advances by 0x9E3779B97F4A7C15, output mixed with
// multipliers 0xBF58476D1CE4E5B9 and 0x94D049BB133111EB.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  auto next() -> std::uint64_t {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  auto split() -> SplitMix64 { return SplitMix64(next()); }

  // Uniform in [0, n) by rejection; n must be positive.
  auto below(std::uint64_t n) -> std::uint64_t {
    const std::uint64_t threshold = (0 - n) % n;
    for (;;)
      if (auto r = next(); r >= threshold) return r % n;
  }

  auto uniform(std::uint64_t lo, std::uint64_t hi) -> std::uint64_t { return lo + below(hi - lo + 1); }
  auto unit() -> double { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
  auto chance(double p) -> bool { return unit() < p; }

 private:
  std::uint64_t state_;
};

}  // namespace chromatic::verify
