#include "entrokit/suffix_index.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace entrokit {

std::vector<std::int32_t> build_suffix_array(const std::uint8_t* s, std::int64_t n) {
  std::vector<std::int32_t> sa(static_cast<std::size_t>(n));
  if (n == 0) return sa;
  std::vector<std::int32_t> rank(static_cast<std::size_t>(n)), tmp(static_cast<std::size_t>(n));
  std::vector<std::int32_t> cnt;

  // Initial order by single symbol.
  {
    cnt.assign(257, 0);
    for (std::int64_t i = 0; i < n; ++i) ++cnt[s[i] + 1];
    for (std::size_t c = 1; c < cnt.size(); ++c) cnt[c] += cnt[c - 1];
    for (std::int64_t i = 0; i < n; ++i) sa[static_cast<std::size_t>(cnt[s[i]]++)] = static_cast<std::int32_t>(i);
    rank[static_cast<std::size_t>(sa[0])] = 0;
    for (std::int64_t r = 1; r < n; ++r) {
      const std::int32_t cur = sa[static_cast<std::size_t>(r)];
      const std::int32_t prv = sa[static_cast<std::size_t>(r - 1)];
      rank[static_cast<std::size_t>(cur)] =
          rank[static_cast<std::size_t>(prv)] + (s[cur] != s[prv] ? 1 : 0);
    }
  }

  for (std::int64_t len = 1; len < n; len <<= 1) {
    const std::int32_t classes = rank[static_cast<std::size_t>(sa[static_cast<std::size_t>(n - 1)])] + 1;
    if (classes == n) break;

    // Stable sort by second key: positions with no second half come first,
    // the rest follow the current SA order shifted left by len.
    std::int64_t p = 0;
    for (std::int64_t i = n - len; i < n; ++i) tmp[static_cast<std::size_t>(p++)] = static_cast<std::int32_t>(i);
    for (std::int64_t r = 0; r < n; ++r) {
      const std::int32_t i = sa[static_cast<std::size_t>(r)];
      if (i >= len) tmp[static_cast<std::size_t>(p++)] = i - static_cast<std::int32_t>(len);
    }

    // Stable counting sort by first key.
    cnt.assign(static_cast<std::size_t>(classes) + 1, 0);
    for (std::int64_t i = 0; i < n; ++i) ++cnt[static_cast<std::size_t>(rank[static_cast<std::size_t>(i)]) + 1];
    for (std::size_t c = 1; c < cnt.size(); ++c) cnt[c] += cnt[c - 1];
    for (std::int64_t r = 0; r < n; ++r) {
      const std::int32_t i = tmp[static_cast<std::size_t>(r)];
      sa[static_cast<std::size_t>(cnt[static_cast<std::size_t>(rank[static_cast<std::size_t>(i)])]++)] = i;
    }

    // Recompute ranks over (rank, rank+len) pairs.
    std::vector<std::int32_t>& next = tmp;
    auto pair_at = [&](std::int32_t i) {
      const std::int32_t a = rank[static_cast<std::size_t>(i)];
      const std::int32_t b =
          (i + len < n) ? rank[static_cast<std::size_t>(i + len)] : -1;
      return std::pair<std::int32_t, std::int32_t>(a, b);
    };
    std::int32_t cls = 0;
    next[static_cast<std::size_t>(sa[0])] = 0;
    for (std::int64_t r = 1; r < n; ++r) {
      if (pair_at(sa[static_cast<std::size_t>(r)]) != pair_at(sa[static_cast<std::size_t>(r - 1)])) ++cls;
      next[static_cast<std::size_t>(sa[static_cast<std::size_t>(r)])] = cls;
    }
    rank.swap(next);
  }
  return sa;
}

std::vector<std::int32_t> build_lcp_array(const std::uint8_t* s, std::int64_t n,
                                          const std::vector<std::int32_t>& sa,
                                          const std::vector<std::int32_t>& rank) {
  std::vector<std::int32_t> lcp(n > 0 ? static_cast<std::size_t>(n - 1) : 0, 0);
  std::int64_t h = 0;
  for (std::int64_t i = 0; i < n; ++i) {
    const std::int64_t r = rank[static_cast<std::size_t>(i)];
    if (r == n - 1) {
      h = 0;
      continue;
    }
    const std::int64_t j = sa[static_cast<std::size_t>(r + 1)];
    while (i + h < n && j + h < n && s[i + h] == s[j + h]) ++h;
    lcp[static_cast<std::size_t>(r)] = static_cast<std::int32_t>(h);
    if (h > 0) --h;
  }
  return lcp;
}

BlockRmq::BlockRmq(std::vector<std::int32_t> values) : values_(std::move(values)) {
  const std::int64_t n = static_cast<std::int64_t>(values_.size());
  const std::int64_t nb = (n + kBlock - 1) / kBlock;
  if (nb == 0) return;
  sparse_.emplace_back(static_cast<std::size_t>(nb));
  for (std::int64_t b = 0; b < nb; ++b) {
    std::int32_t m = values_[static_cast<std::size_t>(b * kBlock)];
    const std::int64_t hi = std::min(n, (b + 1) * kBlock);
    for (std::int64_t i = b * kBlock + 1; i < hi; ++i) m = std::min(m, values_[static_cast<std::size_t>(i)]);
    sparse_[0][static_cast<std::size_t>(b)] = m;
  }
  for (std::int64_t k = 1; (std::int64_t{1} << k) <= nb; ++k) {
    const std::int64_t width = std::int64_t{1} << k;
    sparse_.emplace_back(static_cast<std::size_t>(nb - width + 1));
    for (std::int64_t b = 0; b + width <= nb; ++b) {
      sparse_[static_cast<std::size_t>(k)][static_cast<std::size_t>(b)] =
          std::min(sparse_[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(b)],
                   sparse_[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(b + width / 2)]);
    }
  }
}

std::int32_t BlockRmq::min_in(std::int64_t lo, std::int64_t hi) const {
  const std::int64_t bl = lo / kBlock, bh = hi / kBlock;
  std::int32_t m = values_[static_cast<std::size_t>(lo)];
  if (bl == bh) {
    for (std::int64_t i = lo + 1; i <= hi; ++i) m = std::min(m, values_[static_cast<std::size_t>(i)]);
    return m;
  }
  const std::int64_t l_end = (bl + 1) * kBlock - 1;
  for (std::int64_t i = lo + 1; i <= l_end; ++i) m = std::min(m, values_[static_cast<std::size_t>(i)]);
  for (std::int64_t i = bh * kBlock; i <= hi; ++i) m = std::min(m, values_[static_cast<std::size_t>(i)]);
  if (bl + 1 <= bh - 1) {
    const std::int64_t b0 = bl + 1, b1 = bh - 1;
    const int k = std::bit_width(static_cast<std::uint64_t>(b1 - b0 + 1)) - 1;
    m = std::min(m, sparse_[static_cast<std::size_t>(k)][static_cast<std::size_t>(b0)]);
    m = std::min(m, sparse_[static_cast<std::size_t>(k)][static_cast<std::size_t>(
                        b1 - (std::int64_t{1} << k) + 1)]);
  }
  return m;
}

BitIndex::BitIndex(std::int64_t n) : n_(n) {
  const std::int64_t w0 = (n + 63) / 64;
  const std::int64_t w1 = (w0 + 63) / 64;
  const std::int64_t w2 = (w1 + 63) / 64;
  l0_.assign(static_cast<std::size_t>(w0), 0);
  l1_.assign(static_cast<std::size_t>(w1), 0);
  l2_.assign(static_cast<std::size_t>(w2), 0);
}

void BitIndex::insert(std::int64_t i) {
  l0_[static_cast<std::size_t>(i >> 6)] |= (std::uint64_t{1} << (i & 63));
  const std::int64_t w0 = i >> 6;
  l1_[static_cast<std::size_t>(w0 >> 6)] |= (std::uint64_t{1} << (w0 & 63));
  const std::int64_t w1 = w0 >> 6;
  l2_[static_cast<std::size_t>(w1 >> 6)] |= (std::uint64_t{1} << (w1 & 63));
}

void BitIndex::erase(std::int64_t i) {
  const std::int64_t w0 = i >> 6;
  l0_[static_cast<std::size_t>(w0)] &= ~(std::uint64_t{1} << (i & 63));
  if (l0_[static_cast<std::size_t>(w0)] != 0) return;
  const std::int64_t w1 = w0 >> 6;
  l1_[static_cast<std::size_t>(w1)] &= ~(std::uint64_t{1} << (w0 & 63));
  if (l1_[static_cast<std::size_t>(w1)] != 0) return;
  l2_[static_cast<std::size_t>(w1 >> 6)] &= ~(std::uint64_t{1} << (w1 & 63));
}

bool BitIndex::contains(std::int64_t i) const {
  return (l0_[static_cast<std::size_t>(i >> 6)] >> (i & 63)) & 1;
}

namespace {

inline int top_bit(std::uint64_t w) { return 63 - std::countl_zero(w); }
inline int low_bit(std::uint64_t w) { return std::countr_zero(w); }

}  // namespace

std::int64_t BitIndex::pred(std::int64_t i) const {
  if (i <= 0) return -1;
  std::int64_t pos = i - 1;  // search positions <= pos
  std::int64_t w0 = pos >> 6;
  const std::uint64_t first = l0_[static_cast<std::size_t>(w0)] & (~std::uint64_t{0} >> (63 - (pos & 63)));
  if (first != 0) return (w0 << 6) | top_bit(first);
  // Climb: find the nearest earlier nonempty level-0 word.
  std::int64_t w1 = w0 >> 6;
  std::uint64_t m1 = l1_[static_cast<std::size_t>(w1)] & ((w0 & 63) ? (~std::uint64_t{0} >> (64 - (w0 & 63))) : 0);
  if (m1 == 0) {
    std::int64_t w2 = w1 >> 6;
    std::uint64_t m2 = l2_[static_cast<std::size_t>(w2)] & ((w1 & 63) ? (~std::uint64_t{0} >> (64 - (w1 & 63))) : 0);
    while (m2 == 0) {
      if (--w2 < 0) return -1;
      m2 = l2_[static_cast<std::size_t>(w2)];
    }
    w1 = (w2 << 6) | top_bit(m2);
    m1 = l1_[static_cast<std::size_t>(w1)];
  }
  w0 = (w1 << 6) | top_bit(m1);
  return (w0 << 6) | top_bit(l0_[static_cast<std::size_t>(w0)]);
}

std::int64_t BitIndex::succ(std::int64_t i) const {
  if (i >= n_ - 1) return -1;
  std::int64_t pos = i + 1;  // search positions >= pos
  std::int64_t w0 = pos >> 6;
  const std::uint64_t first = l0_[static_cast<std::size_t>(w0)] & (~std::uint64_t{0} << (pos & 63));
  if (first != 0) return (w0 << 6) | low_bit(first);
  std::int64_t w1 = w0 >> 6;
  std::uint64_t m1 = ((w0 & 63) == 63) ? 0 : (l1_[static_cast<std::size_t>(w1)] & (~std::uint64_t{0} << ((w0 & 63) + 1)));
  if (m1 == 0) {
    std::int64_t w2 = w1 >> 6;
    std::uint64_t m2 = ((w1 & 63) == 63) ? 0 : (l2_[static_cast<std::size_t>(w2)] & (~std::uint64_t{0} << ((w1 & 63) + 1)));
    const std::int64_t w2_count = static_cast<std::int64_t>(l2_.size());
    while (m2 == 0) {
      if (++w2 >= w2_count) return -1;
      m2 = l2_[static_cast<std::size_t>(w2)];
    }
    w1 = (w2 << 6) | low_bit(m2);
    m1 = l1_[static_cast<std::size_t>(w1)];
  }
  w0 = (w1 << 6) | low_bit(m1);
  return (w0 << 6) | low_bit(l0_[static_cast<std::size_t>(w0)]);
}

}  // namespace entrokit
