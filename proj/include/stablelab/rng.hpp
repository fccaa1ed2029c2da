#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace stablelab {

using Rng = std::mt19937_64;

/// splitmix64 finalizer; decorrelates nearby seeds.
inline std::uint64_t mix_seed(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// Seed for stream `index` of a run with base seed `base`. Streams are
/// independent of how many of them exist, so replication r is reproducible
/// in isolation.
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index) {
  return mix_seed(base + index * 0x9e3779b97f4a7c15ULL);
}

inline Rng make_rng(std::uint64_t base, std::uint64_t index) {
  return Rng(derive_seed(base, index));
}

/// Uniform on the open interval (0,1); safe to pass to log().
inline double uniform_open01(Rng& rng) {
  return (static_cast<double>(rng() >> 11) + 0.5) * 0x1.0p-53;
}

inline double exponential(Rng& rng, double rate = 1.0) {
  return -std::log(uniform_open01(rng)) / rate;
}

/// Box-Muller without caching the second variate: consumes two uniforms,
/// keeps the stream position independent of call history.
inline double normal01(Rng& rng) {
  const double u1 = uniform_open01(rng);
  const double u2 = uniform_open01(rng);
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925287 * u2);
}

}  // namespace stablelab
