#pragma once

#include <cmath>
#include <cstdint>

namespace fraclab {

/// SplitMix64 step; used for seeding and for deriving per-stream seeds.
inline std::uint64_t splitmix64(std::uint64_t& x) {
  x += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = x;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// Seed for an indexed stream derived from a master seed.
inline std::uint64_t stream_seed(std::uint64_t master, std::uint64_t index) {
  std::uint64_t x = master ^ (0x9e3779b97f4a7c15ULL * (index + 1));
  return splitmix64(x);
}

/// xoshiro256++ (Blackman/Vigna). Small, fast, 2^256-1 period.
class Xoshiro256 {
public:
  explicit Xoshiro256(std::uint64_t seed) {
    std::uint64_t x = seed;
    for (auto& w : s_) w = splitmix64(x);
  }

  std::uint64_t next() {
    const std::uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
    const std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
  }

  /// uniform double in [0, 1)
  double uniform() { return (next() >> 11) * 0x1.0p-53; }

  /// uniform double in (0, 1]
  double uniform_pos() { return ((next() >> 11) + 1) * 0x1.0p-53; }

  /// Exp(1) variate
  double exponential() { return -std::log(uniform_pos()); }

private:
  static std::uint64_t rotl(std::uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
  }
  std::uint64_t s_[4];
};

}  // namespace fraclab
