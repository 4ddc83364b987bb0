#pragma once

#include <cstdint>
#include <random>

namespace ucap {

// Seed for every randomized component. Same seed + same inputs gives
// bit-identical output across runs and platforms.
struct RngSeed {
  std::uint64_t value = 0;
};

// Derives an independent stream for a tagged sub-component (splitmix64 of
// seed ^ tag), so e.g. the LRA phase inside the hybrid consumes the same
// stream as a standalone LRA run with the same config.
std::uint64_t derive_seed(RngSeed seed, std::uint64_t tag);

// mt19937_64 with hand-rolled bounded sampling. std::uniform_int_distribution
// is not pinned down by the standard, so draws go through our own rejection
// sampling to keep results identical across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  explicit Rng(RngSeed seed) : engine_(seed.value) {}

  std::uint64_t next_u64() { return engine_(); }

  // Uniform in [0, bound); bound must be positive.
  std::int64_t below(std::int64_t bound);

  int below_int(int bound) { return static_cast<int>(below(bound)); }

  // Uniform in [0, 1) with 53 random bits.
  double unit() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  bool chance(double p) { return unit() < p; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace ucap
