#pragma once

#include <cstdint>
#include <vector>

namespace smallworld {

// SplitMix64 (Steele, Lea & Flood constants). Self-contained so that every
// seeded result is reproducible bit-for-bit across platforms and standard
// library versions; std::shuffle and the std distributions make no such
// guarantee.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  // Uniform double in [0, 1), 53 random bits.
  double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

 private:
  std::uint64_t state_;
};

// Uniform integer in [0, bound) via 128-bit multiply-shift. The modulo bias
// is < bound / 2^64, far below anything observable at graph scale.
inline std::uint64_t bounded(SplitMix64& rng, std::uint64_t bound) {
  return static_cast<std::uint64_t>(
      (static_cast<unsigned __int128>(rng.next()) * bound) >> 64);
}

// Derives the seed of an independent substream. Streams for different
// (seed, stream) pairs are decorrelated by a full SplitMix64 scramble.
inline std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ull * (stream + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

// Fisher-Yates with the self-contained generator above.
template <typename T>
void deterministic_shuffle(std::vector<T>& values, SplitMix64& rng) {
  for (std::size_t i = values.size(); i > 1; --i) {
    std::size_t j = static_cast<std::size_t>(bounded(rng, i));
    std::swap(values[i - 1], values[j]);
  }
}

}  // namespace smallworld
