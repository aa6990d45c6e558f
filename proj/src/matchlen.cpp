#include "entrokit/matchlen.hpp"

#include <algorithm>
#include <stdexcept>

#include <omp.h>

#include "entrokit/threads.hpp"

namespace entrokit {

std::int32_t match_length_at(const SymbolSequence& x, std::int64_t position, std::int64_t window) {
  const std::int64_t n = x.length();
  if (window < 1 || position - window < 0 || position >= n) {
    throw std::out_of_range("match_length_at: window not inside data");
  }
  const std::int64_t cap = std::min(window, n - position);
  std::int64_t best = 0;
  for (std::int64_t j = position - window; j <= position - 1; ++j) {
    std::int64_t len = 0;
    while (len < cap && x[j + len] == x[position + len]) ++len;
    best = std::max(best, len);
    if (best == cap) break;
  }
  return static_cast<std::int32_t>(best + 1);
}

std::optional<std::int64_t> recurrence_time(const SymbolSequence& x, std::int64_t position,
                                            std::int64_t m) {
  const std::int64_t n = x.length();
  if (m < 1 || position < 0 || position + m > n) {
    throw std::out_of_range("recurrence_time: block not inside data");
  }
  for (std::int64_t k = 1; position - k >= 0; ++k) {
    bool equal = true;
    for (std::int64_t t = 0; t < m; ++t) {
      if (x[position - k + t] != x[position + t]) {
        equal = false;
        break;
      }
    }
    if (equal) return k;
  }
  return std::nullopt;
}

struct MatchIndex::Impl {
  std::int64_t n = 0;
  std::vector<std::int32_t> sa;
  std::vector<std::int32_t> rank;
  BlockRmq rmq;
};

MatchIndex::MatchIndex(const SymbolSequence& x) : impl_(std::make_unique<Impl>()) {
  impl_->n = x.length();
  impl_->sa = build_suffix_array(x.data(), impl_->n);
  impl_->rank.assign(static_cast<std::size_t>(impl_->n), 0);
  for (std::int64_t r = 0; r < impl_->n; ++r) {
    impl_->rank[static_cast<std::size_t>(impl_->sa[static_cast<std::size_t>(r)])] =
        static_cast<std::int32_t>(r);
  }
  impl_->rmq = BlockRmq(build_lcp_array(x.data(), impl_->n, impl_->sa, impl_->rank));
}

MatchIndex::~MatchIndex() = default;
MatchIndex::MatchIndex(MatchIndex&&) noexcept = default;
MatchIndex& MatchIndex::operator=(MatchIndex&&) noexcept = default;

namespace {

// Longest common prefix with the nearest window member in suffix order;
// the best window start is always a rank-neighbor of the target's rank.
struct RankNeighborScan {
  const std::vector<std::int32_t>& rank;
  const BlockRmq& rmq;
  BitIndex members;

  RankNeighborScan(const std::vector<std::int32_t>& rank_of_pos, const BlockRmq& lcp_rmq,
                   std::int64_t n)
      : rank(rank_of_pos), rmq(lcp_rmq), members(n) {}

  void add(std::int64_t pos) { members.insert(rank[static_cast<std::size_t>(pos)]); }
  void remove(std::int64_t pos) { members.erase(rank[static_cast<std::size_t>(pos)]); }

  std::int64_t best_lcp(std::int64_t pos) const {
    const std::int64_t r = rank[static_cast<std::size_t>(pos)];
    std::int64_t best = 0;
    const std::int64_t below = members.pred(r);
    if (below >= 0) best = rmq.min_in(below, r - 1);
    const std::int64_t above = members.succ(r);
    if (above >= 0) best = std::max(best, static_cast<std::int64_t>(rmq.min_in(r, above - 1)));
    return best;
  }
};

}  // namespace

MatchLengthProfile MatchIndex::fixed_profile(std::int64_t n, std::int64_t first_position,
                                             std::int64_t count) const {
  const std::int64_t len = impl_->n;
  if (n < 1 || first_position < n || count < 1 || first_position + count > len) {
    throw std::out_of_range("fixed_profile: positions or window out of bounds");
  }
  MatchLengthProfile profile;
  profile.kind = WindowKind::Fixed;
  profile.window = n;
  profile.first_position = first_position;
  profile.values.assign(static_cast<std::size_t>(count), 0);

  const int threads = static_cast<int>(std::min<std::int64_t>(effective_threads(), count));
#pragma omp parallel num_threads(threads)
  {
    const int team = omp_get_num_threads();
    const int t = omp_get_thread_num();
    const std::int64_t chunk = (count + team - 1) / team;
    const std::int64_t lo = first_position + t * chunk;
    const std::int64_t hi = std::min(first_position + count, lo + chunk);
    if (lo < hi) {
      RankNeighborScan scan(impl_->rank, impl_->rmq, impl_->n);
      for (std::int64_t j = lo - n; j < lo; ++j) scan.add(j);
      for (std::int64_t i = lo; i < hi; ++i) {
        const std::int64_t best = std::min(scan.best_lcp(i), n);
        profile.values[static_cast<std::size_t>(i - first_position)] =
            static_cast<std::int32_t>(best + 1);
        if (i + 1 < hi) {
          scan.add(i);
          scan.remove(i - n);
        }
      }
    }
  }
  return profile;
}

MatchLengthProfile MatchIndex::increasing_profile(std::int64_t first_position,
                                                  std::int64_t count) const {
  const std::int64_t len = impl_->n;
  if (first_position < 1 || count < 1 || first_position + count > len) {
    throw std::out_of_range("increasing_profile: positions out of bounds");
  }
  MatchLengthProfile profile;
  profile.kind = WindowKind::Increasing;
  profile.first_position = first_position;
  profile.values.assign(static_cast<std::size_t>(count), 0);

  const int threads = static_cast<int>(std::min<std::int64_t>(effective_threads(), count));
#pragma omp parallel num_threads(threads)
  {
    const int team = omp_get_num_threads();
    const int t = omp_get_thread_num();
    const std::int64_t chunk = (count + team - 1) / team;
    const std::int64_t lo = first_position + t * chunk;
    const std::int64_t hi = std::min(first_position + count, lo + chunk);
    if (lo < hi) {
      RankNeighborScan scan(impl_->rank, impl_->rmq, impl_->n);
      for (std::int64_t j = 0; j < lo; ++j) scan.add(j);
      for (std::int64_t i = lo; i < hi; ++i) {
        const std::int64_t best = std::min(scan.best_lcp(i), i);
        profile.values[static_cast<std::size_t>(i - first_position)] =
            static_cast<std::int32_t>(best + 1);
        if (i + 1 < hi) scan.add(i);
      }
    }
  }
  return profile;
}

MatchLengthProfile matching_statistics(const SymbolSequence& x, WindowKind kind, std::int64_t n,
                                       std::int64_t first_position, std::int64_t count) {
  MatchIndex index(x);
  return kind == WindowKind::Fixed ? index.fixed_profile(n, first_position, count)
                                   : index.increasing_profile(first_position, count);
}

MatchLengthProfile matching_statistics_reference(const SymbolSequence& x, WindowKind kind,
                                                 std::int64_t n, std::int64_t first_position,
                                                 std::int64_t count) {
  MatchLengthProfile profile;
  profile.kind = kind;
  profile.window = kind == WindowKind::Fixed ? n : 0;
  profile.first_position = first_position;
  profile.values.reserve(static_cast<std::size_t>(count));
  for (std::int64_t i = first_position; i < first_position + count; ++i) {
    const std::int64_t window = kind == WindowKind::Fixed ? n : i;
    profile.values.push_back(match_length_at(x, i, window));
  }
  return profile;
}

}  // namespace entrokit
