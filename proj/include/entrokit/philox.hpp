#pragma once

#include <cmath>
#include <cstdint>

namespace entrokit {

/// Counter-based random generator (Philox-4x32, 10 rounds).
///
/// A (seed, stream) pair addresses an independent stream: the 64-bit seed is
/// the cipher key and the stream id occupies the upper half of the counter,
/// so distinct streams can never collide. Output is a pure function of
/// (seed, stream, position) computed with integer arithmetic only, which
/// makes every draw reproducible across platforms.
class PhiloxRng {
 public:
  explicit PhiloxRng(std::uint64_t seed, std::uint64_t stream = 0)
      : key0_(static_cast<std::uint32_t>(seed)),
        key1_(static_cast<std::uint32_t>(seed >> 32)),
        stream_lo_(static_cast<std::uint32_t>(stream)),
        stream_hi_(static_cast<std::uint32_t>(stream >> 32)) {}

  std::uint32_t next_u32() {
    if (avail_ == 0) refill();
    return buf_[--avail_];
  }

  std::uint64_t next_u64() {
    std::uint64_t lo = next_u32();
    std::uint64_t hi = next_u32();
    return (hi << 32) | lo;
  }

  /// Uniform double in [0,1) with 53 random bits.
  double uniform01() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  /// Uniform integer in [0, n), n >= 1, by rejection (no modulo bias).
  std::uint64_t below(std::uint64_t n) {
    const std::uint64_t threshold = (0 - n) % n;
    for (;;) {
      std::uint64_t r = next_u64();
      if (r >= threshold) return r % n;
    }
  }

  bool bernoulli(double p) { return uniform01() < p; }

  /// Geometric on {1,2,...} with success probability p (mean 1/p).
  std::int64_t geometric(double p) {
    if (p >= 1.0) return 1;
    // Coin-flip loop for ordinary p; inverse CDF for very small p.
    if (p > 1.0 / 4096.0) {
      std::int64_t t = 1;
      while (!bernoulli(p)) ++t;
      return t;
    }
    double u = uniform01();
    return 1 + static_cast<std::int64_t>(std::floor(std::log1p(-u) / std::log1p(-p)));
  }

 private:
  static constexpr std::uint32_t kMul0 = 0xD2511F53u;
  static constexpr std::uint32_t kMul1 = 0xCD9E8D57u;
  static constexpr std::uint32_t kWeyl0 = 0x9E3779B9u;
  static constexpr std::uint32_t kWeyl1 = 0xBB67AE85u;

  void refill() {
    std::uint32_t c0 = static_cast<std::uint32_t>(block_);
    std::uint32_t c1 = static_cast<std::uint32_t>(block_ >> 32);
    std::uint32_t c2 = stream_lo_;
    std::uint32_t c3 = stream_hi_;
    ++block_;
    std::uint32_t k0 = key0_, k1 = key1_;
    for (int round = 0; round < 10; ++round) {
      const std::uint64_t p0 = static_cast<std::uint64_t>(kMul0) * c0;
      const std::uint64_t p1 = static_cast<std::uint64_t>(kMul1) * c2;
      const std::uint32_t hi0 = static_cast<std::uint32_t>(p0 >> 32);
      const std::uint32_t lo0 = static_cast<std::uint32_t>(p0);
      const std::uint32_t hi1 = static_cast<std::uint32_t>(p1 >> 32);
      const std::uint32_t lo1 = static_cast<std::uint32_t>(p1);
      const std::uint32_t n0 = hi1 ^ c1 ^ k0;
      const std::uint32_t n1 = lo1;
      const std::uint32_t n2 = hi0 ^ c3 ^ k1;
      const std::uint32_t n3 = lo0;
      c0 = n0;
      c1 = n1;
      c2 = n2;
      c3 = n3;
      k0 += kWeyl0;
      k1 += kWeyl1;
    }
    buf_[3] = c0;
    buf_[2] = c1;
    buf_[1] = c2;
    buf_[0] = c3;
    avail_ = 4;
  }

  std::uint32_t key0_, key1_;
  std::uint32_t stream_lo_, stream_hi_;
  std::uint64_t block_ = 0;
  std::uint32_t buf_[4] = {0, 0, 0, 0};
  int avail_ = 0;
};

/// Seed plus stream id; equal pairs reproduce the same sequence exactly.
struct RngSeed {
  std::uint64_t seed = 0;
  std::uint64_t stream = 0;
};

}  // namespace entrokit
