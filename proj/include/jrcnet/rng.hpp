#pragma once

// Philox4x32-10 counter-based generator (Salmon et al., SC'11).
//
// Every random quantity in a simulation is addressed by
// (seed, trial, stream, block): the seed is the key, the rest is the counter.
// A trial therefore draws the same numbers no matter which thread runs it or
// in what order trials are visited.

#include <array>
#include <cmath>
#include <cstdint>
#include <limits>

namespace jrc::rng {

inline constexpr const char* kGeneratorName = "philox4x32-10";

using Counter = std::array<std::uint32_t, 4>;
using Key = std::array<std::uint32_t, 2>;

inline Counter philox4x32_10(Counter ctr, Key key) {
  constexpr std::uint32_t kM0 = 0xD2511F53u, kM1 = 0xCD9E8D57u;
  constexpr std::uint32_t kW0 = 0x9E3779B9u, kW1 = 0xBB67AE85u;
  for (int round = 0; round < 10; ++round) {
    const std::uint64_t p0 = std::uint64_t(kM0) * ctr[0];
    const std::uint64_t p1 = std::uint64_t(kM1) * ctr[2];
    const auto hi0 = std::uint32_t(p0 >> 32), lo0 = std::uint32_t(p0);
    const auto hi1 = std::uint32_t(p1 >> 32), lo1 = std::uint32_t(p1);
    ctr = {hi1 ^ ctr[1] ^ key[0], lo1, hi0 ^ ctr[3] ^ key[1], lo0};
    key[0] += kW0;
    key[1] += kW1;
  }
  return ctr;
}

/// 53-bit uniform in [0, 1) from two 32-bit words.
inline double to_unit(std::uint32_t a, std::uint32_t b) {
  const std::uint64_t bits = (std::uint64_t(a >> 5) << 26) | (b >> 6);
  return double(bits) * 0x1.0p-53;
}

/// Independent stream `stream` of trial `trial` under `seed`.
class Stream {
public:
  using result_type = std::uint32_t;

  Stream(std::uint64_t seed, std::uint64_t trial, std::uint32_t stream)
      : key_{std::uint32_t(seed), std::uint32_t(seed >> 32)},
        trial_lo_(std::uint32_t(trial)),
        trial_hi_(std::uint32_t(trial >> 32)),
        stream_(stream) {}

  /// The four words of block `index`; random access, no state change.
  Counter block(std::uint32_t index) const {
    return philox4x32_10({index, stream_, trial_lo_, trial_hi_}, key_);
  }

  // Sequential URBG interface over consecutive blocks.
  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }
  result_type operator()() {
    if (used_ == 4) {
      buffer_ = block(next_block_++);
      used_ = 0;
    }
    return buffer_[used_++];
  }

private:
  Key key_;
  std::uint32_t trial_lo_, trial_hi_, stream_;
  std::uint32_t next_block_ = 0;
  Counter buffer_{};
  int used_ = 4;
};

/// Uniform in [0, 1) from words 0-1 (half = 0) or 2-3 (half = 1) of a block.
inline double uniform(const Counter& c, int half = 0) {
  return to_unit(c[2 * half], c[2 * half + 1]);
}

/// Exponential with the given mean; u in [0, 1).
inline double exponential(double u, double mean) { return -mean * std::log1p(-u); }

/// Weibull(shape alpha, scale) by inversion; u in [0, 1).
inline double weibull(double u, double alpha, double scale) {
  return scale * std::pow(-std::log1p(-u), 1.0 / alpha);
}

}  // namespace jrc::rng
