#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "entrokit/seqcore.hpp"
#include "entrokit/suffix_index.hpp"

namespace entrokit {

enum class WindowKind { Fixed, Increasing };

/// Match lengths L_i over a contiguous run of positions.
///
/// At position i the match length is 1 plus the longest prefix of
/// x[i], x[i+1], ... that also occurs starting somewhere in the window of
/// positions preceding i. Fixed profiles use a window of constant length n
/// (the n positions before i); increasing profiles use the whole prefix
/// x[0..i-1] as the window. Matched copies may run past the window end
/// (overlapping the match target), so L <= n+1 in fixed mode and L <= i+1 in
/// increasing mode, with a further cap at the end of the data.
struct MatchLengthProfile {
  std::vector<std::int32_t> values;
  WindowKind kind = WindowKind::Fixed;
  std::int64_t window = 0;          // n; meaningful in fixed mode
  std::int64_t first_position = 0;  // data index of values[0]

  std::int64_t count() const { return static_cast<std::int64_t>(values.size()); }
};

/// Reference implementation straight from the definition: scans every
/// window start. Quadratic; kept as the oracle for the indexed path.
std::int32_t match_length_at(const SymbolSequence& x, std::int64_t position, std::int64_t window);

/// First k >= 1 such that the m-block starting at `position` already occurs
/// at position - k; nullopt when no copy starts inside the available past.
std::optional<std::int64_t> recurrence_time(const SymbolSequence& x, std::int64_t position,
                                            std::int64_t m);

/// Suffix-array index over one sequence; answers match-length profiles in
/// O(log)-ish time per position independently of the window length.
class MatchIndex {
 public:
  explicit MatchIndex(const SymbolSequence& x);
  ~MatchIndex();
  MatchIndex(MatchIndex&&) noexcept;
  MatchIndex& operator=(MatchIndex&&) noexcept;

  /// L_i for i in [first_position, first_position+count), window length n.
  /// Requires first_position >= n (the window must sit inside the data).
  MatchLengthProfile fixed_profile(std::int64_t n, std::int64_t first_position,
                                   std::int64_t count) const;

  /// L_i with window x[0..i-1], for i in [first_position, ...); requires
  /// first_position >= 1.
  MatchLengthProfile increasing_profile(std::int64_t first_position, std::int64_t count) const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

/// Convenience wrapper: builds the index and extracts one profile.
MatchLengthProfile matching_statistics(const SymbolSequence& x, WindowKind kind, std::int64_t n,
                                       std::int64_t first_position, std::int64_t count);

/// Same contract as matching_statistics, evaluated with match_length_at.
MatchLengthProfile matching_statistics_reference(const SymbolSequence& x, WindowKind kind,
                                                 std::int64_t n, std::int64_t first_position,
                                                 std::int64_t count);

}  // namespace entrokit
