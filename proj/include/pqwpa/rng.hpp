#pragma once

#include <cstdint>
#include <initializer_list>
#include <limits>
#include <random>

namespace pqwpa {

// SplitMix64: a counter-based 64-bit generator. Satisfies
// std::uniform_random_bit_generator, so it plugs into <random>.
class SplitMix64 {
 public:
  using result_type = std::uint64_t;

  explicit SplitMix64(std::uint64_t seed = 0) : state_(seed) {}

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

  result_type operator()() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

 private:
  std::uint64_t state_;
};

// Seed for the stream addressed by `path` under `seed`. Different paths give
// independent streams regardless of the order they are requested in.
inline std::uint64_t derive_seed(std::uint64_t seed, std::initializer_list<std::uint64_t> path) {
  std::uint64_t h = seed;
  for (std::uint64_t step : path) {
    SplitMix64 mix(h ^ (step * 0xD1B54A32D192ED03ULL));
    h = mix();
  }
  return h;
}

// Uniform double in [0, 1) from the top 53 bits of a 64-bit draw.
template <std::uniform_random_bit_generator G>
double unit_interval(G& rng) {
  static_assert(G::min() == 0 && G::max() == std::numeric_limits<std::uint64_t>::max(),
                "unit_interval needs a full-range 64-bit generator");
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace pqwpa
