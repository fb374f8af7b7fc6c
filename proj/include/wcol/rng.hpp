#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

namespace wcol {

/// The one generator used everywhere: 64-bit Mersenne Twister (MT19937-64),
/// whose output sequence is fixed by the C++ standard. Distributions are
/// implemented here rather than taken from <random> so that sampled suites
/// replay bit-for-bit on every platform.
using Rng = std::mt19937_64;

/// SplitMix64 mix of (seed, stream); gives independent per-sample seeds.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

/// Uniform integer in [0, n) by rejection; n > 0.
inline std::uint64_t uniform_below(Rng& rng, std::uint64_t n) {
  const std::uint64_t limit = std::uint64_t(-1) - (std::uint64_t(-1) % n);
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % n;
}

/// Bernoulli trial with probability num/den.
inline bool coin(Rng& rng, std::uint64_t num, std::uint64_t den) { return uniform_below(rng, den) < num; }

template <class T>
void shuffle(std::vector<T>& items, Rng& rng) {
  for (std::size_t i = items.size(); i > 1; --i) {
    std::size_t j = uniform_below(rng, i);
    std::swap(items[i - 1], items[j]);
  }
}

}  // namespace wcol
