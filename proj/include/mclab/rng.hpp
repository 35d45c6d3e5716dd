#pragma once

#include <array>
#include <cstdint>

namespace mclab {

// Identifies one independent random stream: every draw of a trial is a pure
// function of (master_seed, stream_index).
struct RngSeed {
  std::uint64_t master_seed = 0;
  std::uint64_t stream_index = 0;
};

// SplitMix64 output function (Steele, Lea, Flood 2014).
constexpr std::uint64_t splitmix64_mix(std::uint64_t z) noexcept {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

inline constexpr std::uint64_t kGoldenGamma = 0x9E3779B97F4A7C15ULL;

// Stream key derivation, fixed bit-exactly:
//
//   key = master_seed XOR splitmix64_mix(stream_index * kGoldenGamma + kGoldenGamma)
//
// The key then seeds xoshiro256** through four successive SplitMix64 steps
// (state += kGoldenGamma; word = splitmix64_mix(state)).
constexpr std::uint64_t derive_stream_key(RngSeed seed) noexcept {
  return seed.master_seed ^
         splitmix64_mix(seed.stream_index * kGoldenGamma + kGoldenGamma);
}

// xoshiro256** 1.0 (Blackman, Vigna). Satisfies UniformRandomBitGenerator.
class Xoshiro256 {
 public:
  using result_type = std::uint64_t;

  explicit constexpr Xoshiro256(std::uint64_t key) noexcept {
    std::uint64_t sm = key;
    for (auto& word : state_) {
      sm += kGoldenGamma;
      word = splitmix64_mix(sm);
    }
  }

  explicit constexpr Xoshiro256(RngSeed seed) noexcept
      : Xoshiro256(derive_stream_key(seed)) {}

  static constexpr result_type min() noexcept { return 0; }
  static constexpr result_type max() noexcept { return ~result_type{0}; }

  constexpr result_type operator()() noexcept {
    const std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl(state_[3], 45);
    return result;
  }

  // Uniform on [0, 1) with 53 random bits.
  constexpr double uniform() noexcept {
    return static_cast<double>((*this)() >> 11) * 0x1.0p-53;
  }

  // Uniform on (0, 1].
  constexpr double uniform_open_closed() noexcept { return 1.0 - uniform(); }

 private:
  static constexpr std::uint64_t rotl(std::uint64_t x, int k) noexcept {
    return (x << k) | (x >> (64 - k));
  }

  std::array<std::uint64_t, 4> state_{};
};

}  // namespace mclab
