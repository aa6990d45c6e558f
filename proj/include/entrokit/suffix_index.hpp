#pragma once

#include <cstdint>
#include <vector>

namespace entrokit {

/// Suffix array by prefix doubling with counting sort; O(n log n).
std::vector<std::int32_t> build_suffix_array(const std::uint8_t* s, std::int64_t n);

/// Kasai LCP array: lcp[r] = longest common prefix of the suffixes of
/// SA rank r and r+1 (size n-1).
std::vector<std::int32_t> build_lcp_array(const std::uint8_t* s, std::int64_t n,
                                          const std::vector<std::int32_t>& sa,
                                          const std::vector<std::int32_t>& rank);

/// Range-minimum over a static int32 array: 64-wide blocks with a sparse
/// table over block minima. Queries cost one or two word scans.
class BlockRmq {
 public:
  BlockRmq() = default;
  explicit BlockRmq(std::vector<std::int32_t> values);

  /// Minimum of values[lo..hi], inclusive; lo <= hi.
  std::int32_t min_in(std::int64_t lo, std::int64_t hi) const;

 private:
  static constexpr std::int64_t kBlock = 64;
  std::vector<std::int32_t> values_;
  std::vector<std::vector<std::int32_t>> sparse_;  // sparse_[k][b]: min over 2^k blocks from b
};

/// Dynamic membership set over [0, n) with predecessor/successor queries,
/// backed by a three-level bitmap.
class BitIndex {
 public:
  explicit BitIndex(std::int64_t n);

  void insert(std::int64_t i);
  void erase(std::int64_t i);
  bool contains(std::int64_t i) const;

  /// Largest member strictly below i, or -1.
  std::int64_t pred(std::int64_t i) const;
  /// Smallest member strictly above i, or -1.
  std::int64_t succ(std::int64_t i) const;

 private:
  std::int64_t n_ = 0;
  std::vector<std::uint64_t> l0_, l1_, l2_;
};

}  // namespace entrokit
