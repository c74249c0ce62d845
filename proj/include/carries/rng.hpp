#pragma once

#include <array>
#include <cstdint>

namespace carries {

/// splitmix64 step; used only to expand seeds into xoshiro state.
inline std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// xoshiro256** generator. Chosen over std::mt19937_64 +
/// std::uniform_int_distribution because the standard distribution's mapping
/// is implementation-defined; this generator plus explicit rejection sampling
/// makes every simulated sample identical across platforms and compilers.
class Xoshiro256StarStar {
 public:
  explicit Xoshiro256StarStar(std::uint64_t seed) {
    std::uint64_t sm = seed;
    for (auto& word : s_) word = splitmix64(sm);
  }

  /// Independent stream for replication `index` under one master seed: the
  /// seed material is (seed, index) mixed through splitmix64, so streams
  /// never share xoshiro state.
  static Xoshiro256StarStar stream(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t sm = seed;
    const std::uint64_t mixed = splitmix64(sm) ^ (0x632be59bd9b4e019ULL * (index + 1));
    return Xoshiro256StarStar(mixed);
  }

  std::uint64_t next() {
    const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
    const std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
  }

  /// Uniform draw from {0, ..., bound-1} by rejection; exact and
  /// platform-independent. Requires bound >= 1.
  std::uint64_t uniform_below(std::uint64_t bound) {
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
    for (;;) {
      const std::uint64_t draw = next();
      if (draw < limit) return draw % bound;
    }
  }

 private:
  static std::uint64_t rotl(std::uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
  }

  std::array<std::uint64_t, 4> s_{};
};

}  // namespace carries
