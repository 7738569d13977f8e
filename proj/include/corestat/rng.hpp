#pragma once

#include <cstdint>

#include "corestat/bigint.hpp"

namespace corestat {

/// SplitMix64 (Steele, Lea & Flood 2014), stream id "corestat-splitmix64-v1".
/// The state advances by the golden-gamma 0x9e3779b97f4a7c15 and each output
/// passes through the fixed 64-bit finalizer below, so any port reproduces the
/// exact stream from the seed.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

  std::uint64_t next() noexcept {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Independent child stream seeded from the next output.
  SplitMix64 split() noexcept { return SplitMix64(next()); }

  /// Uniform on [0, bound) by masked rejection; bound > 0.
  std::uint64_t below(std::uint64_t bound) noexcept;

  /// Uniform on [0, bound) for an arbitrary-precision bound > 0: draws
  /// ceil(bits/64) words, most significant first, masks to bit_length(bound)
  /// bits and rejects values >= bound.
  BigInt below(const BigInt& bound);

 private:
  std::uint64_t state_;
};

}  // namespace corestat
