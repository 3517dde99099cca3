#pragma once

#include <cstdint>
#include <stdexcept>

namespace hypercover {

// xorshift64* generator: a 64-bit xorshift register followed by an odd
// multiplicative scramble. The algorithm is fixed so that corpora built from
// a seed are reproducible across implementations:
//
//   s ^= s >> 12;  s ^= s << 25;  s ^= s >> 27;  output = s * 0x2545F4914F6CDD1D
//
// A zero seed is remapped to 0x9E3779B97F4A7C15 (the register must be
// nonzero). Test vectors live in the unit tests and in the README.
class Xorshift64Star {
 public:
  static constexpr std::uint64_t kZeroSeedReplacement = 0x9e3779b97f4a7c15ULL;
  static constexpr std::uint64_t kScramble = 0x2545f4914f6cdd1dULL;

  explicit Xorshift64Star(std::uint64_t seed)
      : state_(seed != 0 ? seed : kZeroSeedReplacement) {}

  std::uint64_t next() {
    state_ ^= state_ >> 12;
    state_ ^= state_ << 25;
    state_ ^= state_ >> 27;
    return state_ * kScramble;
  }

  // Uniform draw from [0, k); unbiased via rejection of the short low range.
  std::uint64_t below(std::uint64_t k) {
    if (k == 0) throw std::invalid_argument("below(0)");
    const std::uint64_t threshold = (-k) % k;  // 2^64 mod k
    for (;;) {
      const std::uint64_t r = next();
      if (r >= threshold) return r % k;
    }
  }

 private:
  std::uint64_t state_;
};

}  // namespace hypercover
