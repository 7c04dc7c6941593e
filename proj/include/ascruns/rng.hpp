#pragma once

#include <cstdint>

namespace ascruns::mc {

/// SplitMix64 (Steele, Lea & Flood 2014): 64-bit state, one additive step
/// and a three-stage mix per output. Bit-stable on every platform; all
/// simulation reproducibility rests on this generator and the bounded draw
/// below, so neither may change across releases.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// Uniform draw from {0,...,bound-1}; Lemire's multiply-and-reject scheme,
  /// exactly unbiased.
  std::uint64_t next_below(std::uint64_t bound) {
    unsigned __int128 product =
        static_cast<unsigned __int128>(next()) * bound;
    auto low = static_cast<std::uint64_t>(product);
    if (low < bound) {
      const std::uint64_t threshold = -bound % bound;
      while (low < threshold) {
        product = static_cast<unsigned __int128>(next()) * bound;
        low = static_cast<std::uint64_t>(product);
      }
    }
    return static_cast<std::uint64_t>(product >> 64);
  }

 private:
  std::uint64_t state_;
};

/// Seed of substream k of a master seed: the (k+1)-th output of a SplitMix64
/// stream over the master seed. Replication shards and sweep points draw
/// their seeds from here so that parallel and sequential execution see the
/// same streams.
inline std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t k) {
  SplitMix64 splitter(seed);
  std::uint64_t s = splitter.next();
  for (std::uint64_t step = 0; step < k; ++step) s = splitter.next();
  return s;
}

}  // namespace ascruns::mc
