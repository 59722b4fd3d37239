#pragma once

#include <cstdint>

namespace tfl {

// splitmix64 stream. Chosen over <random> engines/distributions because every
// draw is specified bit-exactly, which keeps seeded outputs byte-identical
// across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, 1), 53-bit resolution.
  double next_unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  // Uniform in (0, 1]; safe as a log() argument.
  double next_unit_open() { return (static_cast<double>(next_u64() >> 11) + 1.0) * 0x1.0p-53; }

  // Uniform integer in [0, bound).
  int next_below(int bound) { return static_cast<int>(next_u64() % static_cast<std::uint64_t>(bound)); }

  // Standard normal via Box-Muller (one value per call; the pair's second
  // member is discarded to keep each draw independent of call history).
  double next_gauss();

  // Derive an independent stream for item `index` of a keyed family.
  static std::uint64_t derive(std::uint64_t seed, std::uint64_t index);

 private:
  std::uint64_t state_;
};

}  // namespace tfl
