#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace multichrome {

// Every stochastic routine draws from std::mt19937_64. Its output sequence
// for a given 64-bit seed is fixed by the C++ standard, so edge lists and
// traces are reproducible across compilers. Distributions are implemented
// here rather than taken from <random>, whose algorithms are unspecified.
using rng_t = std::mt19937_64;

/// SplitMix64 finalizer.
constexpr std::uint64_t mix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

constexpr std::uint64_t fnv1a64(std::string_view s) noexcept {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (char c : s) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ULL;
  }
  return h;
}

/// Named sub-seed: mix64(mix64(master ^ fnv1a64(stream)) + index).
/// Streams are independent of each other and of how many indices are drawn,
/// so adding replicates never perturbs earlier ones.
constexpr std::uint64_t derive_seed(std::uint64_t master, std::string_view stream,
                                    std::uint64_t index = 0) noexcept {
  return mix64(mix64(master ^ fnv1a64(stream)) + index);
}

/// Uniform on [0, 1) with 53 random bits.
inline double uniform01(rng_t& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

inline bool bernoulli(rng_t& rng, double p) { return uniform01(rng) < p; }

/// Uniform integer in [0, n) by rejection; n must be positive.
inline std::uint64_t uniform_index(rng_t& rng, std::uint64_t n) {
  const std::uint64_t limit = rng_t::max() - rng_t::max() % n;
  for (;;) {
    const std::uint64_t x = rng();
    if (x < limit) return x % n;
  }
}

}  // namespace multichrome
