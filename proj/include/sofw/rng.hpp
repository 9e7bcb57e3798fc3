#pragma once

#include <array>
#include <cstdint>
#include <utility>

namespace sofw {

/// Philox 4x64 counter-based generator, 10 rounds. Output for a given
/// (counter, key) pair matches numpy.random.Philox, which serves as the
/// reference implementation in the test suite.
struct Philox4x64 {
  static constexpr std::uint64_t kMul0 = 0xD2E7470EE14C6C93ULL;
  static constexpr std::uint64_t kMul1 = 0xCA5A826395121157ULL;
  static constexpr std::uint64_t kWeyl0 = 0x9E3779B97F4A7C15ULL;
  static constexpr std::uint64_t kWeyl1 = 0xBB67AE8584CAA73BULL;

  static std::array<std::uint64_t, 4> block(std::array<std::uint64_t, 4> counter,
                                            std::uint64_t key0, std::uint64_t key1) {
    for (int round = 0; round < 10; ++round) {
      if (round != 0) {
        key0 += kWeyl0;
        key1 += kWeyl1;
      }
      const auto [hi0, lo0] = mulhilo(kMul0, counter[0]);
      const auto [hi1, lo1] = mulhilo(kMul1, counter[2]);
      counter = {hi1 ^ counter[1] ^ key0, lo1, hi0 ^ counter[3] ^ key1, lo0};
    }
    return counter;
  }

 private:
  static std::pair<std::uint64_t, std::uint64_t> mulhilo(std::uint64_t a, std::uint64_t b) {
    const unsigned __int128 p = static_cast<unsigned __int128>(a) * b;
    return {static_cast<std::uint64_t>(p >> 64), static_cast<std::uint64_t>(p)};
  }
};

/// Sequential draws from one Philox stream. Streams are addressed by
/// (seed, stream index); the solver uses the iteration number as the stream
/// index, so draws are reproducible regardless of how work is scheduled.
class PhiloxStream {
 public:
  PhiloxStream(std::uint64_t seed, std::uint64_t stream)
      : key0_(seed), counter_{0, 0, 0, stream} {}

  std::uint64_t next_u64() {
    if (pos_ == 4) {
      buffer_ = Philox4x64::block(counter_, key0_, key1_);
      pos_ = 0;
      if (++counter_[0] == 0) ++counter_[1];
    }
    return buffer_[pos_++];
  }

  /// Uniform double in (0, 1]; never zero, safe as a log() argument.
  double next_unit() {
    return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;
  }

  /// Uniform integer in [0, n) for n >= 1; unbiased by rejection.
  std::uint64_t next_below(std::uint64_t n) {
    const std::uint64_t rem = (~n + 1) % n;  // 2^64 mod n
    std::uint64_t x = next_u64();
    if (rem != 0) {
      const std::uint64_t bound = ~rem + 1;  // largest multiple of n that fits
      while (x >= bound) x = next_u64();
    }
    return x % n;
  }

 private:
  std::uint64_t key0_ = 0;
  std::uint64_t key1_ = 0;
  std::array<std::uint64_t, 4> counter_{};
  std::array<std::uint64_t, 4> buffer_{};
  int pos_ = 4;
};

}  // namespace sofw
