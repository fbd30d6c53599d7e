#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

// Seedable randomness used across the library. Every random choice (splits,
// bootstrap draws, factor init, neighbor selection) flows through one
// generator family so runs replay from the seeds recorded in a manifest.
// Draw helpers avoid std::uniform_*_distribution on purpose: those are
// implementation-defined, and results must be identical across toolchains.

namespace cfens {

using Rng = std::mt19937_64;

namespace detail {
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}
}  // namespace detail

inline Rng make_rng(std::uint64_t seed) { return Rng(seed); }

// Derives an independent stream seed; chain calls for nested substreams.
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t salt) {
  return detail::splitmix64(detail::splitmix64(base) ^ detail::splitmix64(salt));
}

inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t salt_a,
                                 std::uint64_t salt_b) {
  return derive_seed(derive_seed(base, salt_a), salt_b);
}

// Uniform double in [0, 1), 53-bit resolution.
inline double next_double(Rng& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline double next_in_range(Rng& rng, double lo, double hi) {
  return lo + (hi - lo) * next_double(rng);
}

// Unbiased integer in [0, n) via rejection sampling. n must be > 0.
inline std::uint64_t next_below(Rng& rng, std::uint64_t n) {
  const std::uint64_t threshold = (0 - n) % n;
  for (;;) {
    const std::uint64_t r = rng();
    if (r >= threshold) return r % n;
  }
}

// Fisher-Yates; same sequence on every platform, unlike std::shuffle.
template <typename T>
void shuffle(std::vector<T>& values, Rng& rng) {
  for (std::size_t i = values.size(); i > 1; --i) {
    const std::size_t j = static_cast<std::size_t>(next_below(rng, i));
    std::swap(values[i - 1], values[j]);
  }
}

}  // namespace cfens
