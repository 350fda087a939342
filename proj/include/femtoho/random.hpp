// Copyright 2026 the femtoho authors. Licensed under the Apache License,
// Version 2.0. See the COPYING file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <cmath>
#include <cstdint>

namespace femtoho {

// Seed used by every randomized command when the caller does not supply one.
// Never wall-clock: repeated runs must be reproducible byte for byte.
inline constexpr std::uint64_t kDefaultSeed = 424242;

// splitmix64 stream. The generator is spelled out here (rather than using the
// <random> distributions) because distribution output is
// implementation-defined and we pin simulation results in golden tests.
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed) : state_(seed) {}

  // Independent stream for substream `index` of a master seed. Trials drawn
  // from per-index substreams are unaffected by how other trials consume
  // randomness, which is what makes common-random-number sweeps work.
  static RandomStream substream(std::uint64_t master_seed, std::uint64_t index) {
    std::uint64_t z = master_seed + 0x9e3779b97f4a7c15ull * (index + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return RandomStream(z ^ (z >> 31));
  }

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // Uniform on [0, 1), 53-bit resolution.
  double uniform01() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  // Uniform on (0, 1); rejects the single 0 value so logs stay finite.
  double uniform01_positive() {
    double u = uniform01();
    while (u == 0.0) u = uniform01();
    return u;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  // Exponential with the given mean, strictly positive.
  double exponential(double mean) { return -mean * std::log(uniform01_positive()); }

 private:
  std::uint64_t state_;
};

}  // namespace femtoho
