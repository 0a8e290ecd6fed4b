#ifndef DCOPT_RNG_HPP
#define DCOPT_RNG_HPP

#include <cmath>
#include <cstdint>
#include <random>

namespace dcopt {

// All randomness flows from explicit seeds. The draw helpers below are pinned
// to the raw mt19937_64 output stream instead of std::<distribution>s so that
// serialized traces are identical across standard library implementations.

using Rng = std::mt19937_64;

// Derivation constants for per-purpose substreams of one run seed.
inline constexpr std::uint64_t kSeedStreamSampling = 0x9e3779b97f4a7c15ull;
inline constexpr std::uint64_t kSeedStreamOutput = 0xd1b54a32d192ed03ull;
inline constexpr std::uint64_t kSeedStreamMetrics = 0x94d049bb133111ebull;

inline Rng make_rng(std::uint64_t seed, std::uint64_t stream = 0) {
  return Rng(seed ^ stream);
}

// Uniform in [0, 1) with 53 random bits.
inline double uniform_real(Rng& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Unbiased uniform integer in [0, n). Multiply-shift with rejection.
inline std::uint64_t uniform_index(Rng& rng, std::uint64_t n) {
  using u128 = unsigned __int128;
  std::uint64_t x = rng();
  u128 m = static_cast<u128>(x) * n;
  auto lo = static_cast<std::uint64_t>(m);
  if (lo < n) {
    const std::uint64_t threshold = (0 - n) % n;
    while (lo < threshold) {
      x = rng();
      m = static_cast<u128>(x) * n;
      lo = static_cast<std::uint64_t>(m);
    }
  }
  return static_cast<std::uint64_t>(m >> 64);
}

inline bool bernoulli(Rng& rng, double p) { return uniform_real(rng) < p; }

// Standard normal via Box-Muller; draws two uniforms per call.
inline double normal(Rng& rng) {
  double u1 = uniform_real(rng);
  const double u2 = uniform_real(rng);
  while (u1 <= 0.0) u1 = uniform_real(rng);
  return std::sqrt(-2.0 * std::log(u1)) *
         std::cos(2.0 * 3.14159265358979323846 * u2);
}

}  // namespace dcopt

#endif
