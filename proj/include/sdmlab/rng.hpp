#pragma once

// Seed derivation and portable random draws.
//
// All randomness flows through these helpers so results are bit-identical
// across standard libraries: std::mt19937_64 has a pinned output sequence,
// but the std:: distributions do not, so we roll our own bounded draws.

#include <cstdint>
#include <limits>
#include <random>
#include <string_view>

namespace sdmlab::rng {

// SplitMix64 step: advance-and-finalize.
constexpr std::uint64_t mix(std::uint64_t z) noexcept {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

constexpr std::uint64_t fnv1a(std::string_view bytes) noexcept {
  std::uint64_t h = 1469598103934665603ULL;
  for (char c : bytes) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ULL;
  }
  return h;
}

// Fixed mixing rule for purpose- and index-specific seeds:
//   derive_seed(m, p, a, b) = mix(mix(mix(m ^ fnv1a(p)) ^ a) ^ b)
// Every consumer of randomness (hard-location sampling, per-trial networks,
// subsets, synthetic data, tie-break coins) gets its own purpose string, so
// streams never collide and any one of them can be replayed in isolation.
constexpr std::uint64_t derive_seed(std::uint64_t master, std::string_view purpose,
                                    std::uint64_t a = 0, std::uint64_t b = 0) noexcept {
  return mix(mix(mix(master ^ fnv1a(purpose)) ^ a) ^ b);
}

// Unbiased draw from [0, bound), bound >= 1. Classic rejection below the
// wrap-around threshold.
inline std::uint64_t uniform_below(std::mt19937_64& gen, std::uint64_t bound) {
  const std::uint64_t threshold = (0 - bound) % bound;
  for (;;) {
    const std::uint64_t v = gen();
    if (v >= threshold) return v % bound;
  }
}

// Uniform double in [0, 1) built from 53 random bits.
inline double uniform_unit(std::mt19937_64& gen) {
  return static_cast<double>(gen() >> 11) * 0x1.0p-53;
}

}  // namespace sdmlab::rng
