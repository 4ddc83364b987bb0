#include "ucap/rng.hpp"

#include <cassert>

namespace ucap {

std::uint64_t derive_seed(RngSeed seed, std::uint64_t tag) {
  // splitmix64 finalizer
  std::uint64_t z = seed.value ^ (tag * 0x9e3779b97f4a7c15ULL);
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::int64_t Rng::below(std::int64_t bound) {
  assert(bound > 0);
  const std::uint64_t n = static_cast<std::uint64_t>(bound);
  // Rejection sampling keeps the draw unbiased for any bound.
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
  std::uint64_t r;
  do {
    r = engine_();
  } while (r >= limit);
  return static_cast<std::int64_t>(r % n);
}

}  // namespace ucap
