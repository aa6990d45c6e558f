#pragma once

#include <cstdint>
#include <vector>

#include "entrokit/seqcore.hpp"

namespace entrokit {

/// log2 of the Krichevsky-Trofimov probability assigned to any particular
/// binary string with a zeros and b ones: the product of the sequential
/// updates (count + 1/2) / (total + 1). kt_log_prob(0,0) == 0.
double kt_log_prob(std::int64_t a, std::int64_t b);

/// Context-tree weighting over binary data.
///
/// Contexts run through the most-recent symbols; positions before the start
/// of the data read as zeros. Each tree node carries zero/one counts, the KT
/// probability of the symbols seen at that context, and the weighted
/// probability  w = kt*(1 - 2^-m) + 2^-m * prod(children w)  of the m depth
/// levels the node spans. Runs of depth levels with identical counts are
/// kept as one node, so memory grows with the number of distinct context
/// branchings rather than with depth; a childless node stands for the whole
/// single-path subtree below it, whose weighted probability telescopes to
/// its KT probability exactly.
class CtwTree {
 public:
  /// max_depth < 0 removes the depth bound (unbounded context depth).
  explicit CtwTree(std::int64_t max_depth);

  void append(std::uint8_t symbol);
  void append(const SymbolSequence& x);

  /// log2 of the mixture probability of everything appended so far.
  double log_prob() const;

  std::int64_t symbol_count() const { return static_cast<std::int64_t>(data_.size()); }
  std::int64_t node_count() const { return static_cast<std::int64_t>(nodes_.size()); }

 private:
  struct Node {
    std::uint32_t zeros = 0;
    std::uint32_t ones = 0;
    std::int32_t rep = -1;    // time of one occurrence; provides the symbols below d_top
    std::int32_t d_bot = 0;   // deepest level spanned; kUnbounded for open tails
    std::int32_t child[2] = {-1, -1};
    double log_kt = 0.0;
    double log_w = 0.0;
  };
  static constexpr std::int32_t kUnbounded = INT32_MAX;

  std::uint8_t past_symbol(std::int64_t time, std::int64_t depth) const {
    return depth <= time ? data_[static_cast<std::size_t>(time - depth)] : 0;
  }
  void count_symbol(Node& node, std::uint8_t symbol);
  void refresh_weight(Node& node, std::int64_t d_top);

  std::int64_t max_depth_;  // -1 = unbounded
  std::vector<std::uint8_t> data_;
  std::vector<Node> nodes_;
  std::vector<std::pair<std::int32_t, std::int64_t>> visit_;  // (node, d_top) scratch
};

/// log2 mixture probability with maximal context depth D >= 0.
double ctw_log_prob(const SymbolSequence& x, std::int64_t depth);

/// Depth-unbounded variant; agrees with ctw_log_prob(x, n) for data of
/// length n.
double ctw_log_prob_infinite(const SymbolSequence& x);

/// -(1/n) log2 of the mixture probability; depth < 0 selects the unbounded
/// estimator.
EntropyValue ctw_entropy_estimate(const SymbolSequence& x, std::int64_t depth = -1);

}  // namespace entrokit
