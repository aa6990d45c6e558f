#include "entrokit/ctw.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace entrokit {

namespace {

const double kLn2 = std::log(2.0);
const double kLgammaHalf = std::lgamma(0.5);

// log2(x + y) from a = log2 x, b = log2 y.
double log2_sum(double a, double b) {
  if (a < b) std::swap(a, b);
  return a + std::log1p(std::exp2(b - a)) / kLn2;
}

// log2(1 - 2^-m), m >= 1.
double log2_one_minus_pow2(std::int64_t m) {
  return std::log1p(-std::exp2(-static_cast<double>(m))) / kLn2;
}

}  // namespace

double kt_log_prob(std::int64_t a, std::int64_t b) {
  if (a < 0 || b < 0) throw std::domain_error("kt_log_prob: negative counts");
  if (a + b == 0) return 0.0;
  const double ln = std::lgamma(static_cast<double>(a) + 0.5) +
                    std::lgamma(static_cast<double>(b) + 0.5) -
                    std::lgamma(static_cast<double>(a + b) + 1.0) - 2.0 * kLgammaHalf;
  return ln / kLn2;
}

CtwTree::CtwTree(std::int64_t max_depth) : max_depth_(max_depth < 0 ? -1 : max_depth) {
  Node root;
  root.d_bot = max_depth_ < 0 ? kUnbounded : static_cast<std::int32_t>(max_depth_);
  nodes_.push_back(root);
}

void CtwTree::count_symbol(Node& node, std::uint8_t symbol) {
  const std::int64_t total = static_cast<std::int64_t>(node.zeros) + node.ones;
  const std::int64_t hits = symbol == 0 ? node.zeros : node.ones;
  node.log_kt += std::log2((static_cast<double>(hits) + 0.5) / (static_cast<double>(total) + 1.0));
  if (symbol == 0) {
    ++node.zeros;
  } else {
    ++node.ones;
  }
}

void CtwTree::refresh_weight(Node& node, std::int64_t d_top) {
  if (node.child[0] < 0 && node.child[1] < 0) {
    // Single-path subtree: the weighted probability telescopes to KT.
    node.log_w = node.log_kt;
    return;
  }
  const std::int64_t m = static_cast<std::int64_t>(node.d_bot) - d_top + 1;
  double children = 0.0;
  if (node.child[0] >= 0) children += nodes_[static_cast<std::size_t>(node.child[0])].log_w;
  if (node.child[1] >= 0) children += nodes_[static_cast<std::size_t>(node.child[1])].log_w;
  node.log_w = log2_sum(node.log_kt + log2_one_minus_pow2(m), children - static_cast<double>(m));
}

void CtwTree::append(std::uint8_t symbol) {
  if (symbol > 1) throw std::domain_error("CtwTree: input must be binary");
  const std::int64_t t = static_cast<std::int64_t>(data_.size());
  data_.push_back(symbol);
  visit_.clear();

  const std::int64_t depth_cap = max_depth_ < 0 ? INT64_MAX / 2 : max_depth_;
  std::int32_t node_idx = 0;
  std::int64_t d_top = 0;

  for (;;) {
    visit_.emplace_back(node_idx, d_top);
    Node& node = nodes_[static_cast<std::size_t>(node_idx)];
    const bool childless = node.child[0] < 0 && node.child[1] < 0;
    const std::int64_t rep = node.rep;

    // Compare the new context with this node's span of depth levels.
    std::int64_t limit;
    if (childless) {
      limit = std::min<std::int64_t>(depth_cap, std::max(t, rep));
    } else {
      limit = node.d_bot;
    }
    std::int64_t diverge = 0;
    for (std::int64_t j = d_top + 1; j <= limit; ++j) {
      if (past_symbol(t, j) != past_symbol(rep, j)) {
        diverge = j;
        break;
      }
    }

    if (diverge == 0) {
      count_symbol(node, symbol);
      if (node.rep < 0) node.rep = static_cast<std::int32_t>(t);
      if (childless) break;  // the whole single-path subtree absorbed the symbol
      const std::uint8_t edge = past_symbol(t, static_cast<std::int64_t>(node.d_bot) + 1);
      const std::int32_t next = node.child[edge];
      if (next >= 0) {
        node_idx = next;
        d_top = static_cast<std::int64_t>(node.d_bot) + 1;
        continue;
      }
      Node fresh;
      fresh.rep = static_cast<std::int32_t>(t);
      fresh.d_bot = max_depth_ < 0 ? kUnbounded : static_cast<std::int32_t>(max_depth_);
      count_symbol(fresh, symbol);
      fresh.log_w = fresh.log_kt;
      const std::int32_t fresh_idx = static_cast<std::int32_t>(nodes_.size());
      nodes_.push_back(fresh);
      nodes_[static_cast<std::size_t>(node_idx)].child[edge] = fresh_idx;
      break;
    }

    // The new context leaves this node's span at depth `diverge`: split off
    // the old lower half and hang a fresh tail beside it.
    Node lower;
    lower.zeros = node.zeros;
    lower.ones = node.ones;
    lower.rep = node.rep;
    lower.d_bot = node.d_bot;
    lower.child[0] = node.child[0];
    lower.child[1] = node.child[1];
    lower.log_kt = node.log_kt;
    refresh_weight(lower, diverge);

    Node fresh;
    fresh.rep = static_cast<std::int32_t>(t);
    fresh.d_bot = max_depth_ < 0 ? kUnbounded : static_cast<std::int32_t>(max_depth_);
    count_symbol(fresh, symbol);
    fresh.log_w = fresh.log_kt;

    const std::uint8_t old_edge = past_symbol(rep, diverge);
    const std::uint8_t new_edge = past_symbol(t, diverge);
    const std::int32_t lower_idx = static_cast<std::int32_t>(nodes_.size());
    nodes_.push_back(lower);
    const std::int32_t fresh_idx = static_cast<std::int32_t>(nodes_.size());
    nodes_.push_back(fresh);

    Node& top = nodes_[static_cast<std::size_t>(node_idx)];  // revalidate after push_back
    top.d_bot = static_cast<std::int32_t>(diverge - 1);
    top.child[old_edge] = lower_idx;
    top.child[new_edge] = fresh_idx;
    count_symbol(top, symbol);
    break;
  }

  for (auto it = visit_.rbegin(); it != visit_.rend(); ++it) {
    refresh_weight(nodes_[static_cast<std::size_t>(it->first)], it->second);
  }
}

void CtwTree::append(const SymbolSequence& x) {
  if (x.alphabet_size() != 2) throw std::domain_error("CtwTree: input must be binary");
  data_.reserve(data_.size() + static_cast<std::size_t>(x.length()));
  nodes_.reserve(nodes_.size() + 2 * static_cast<std::size_t>(x.length()) + 4);
  for (std::int64_t i = 0; i < x.length(); ++i) append(x[i]);
}

double CtwTree::log_prob() const { return nodes_[0].log_w; }

double ctw_log_prob(const SymbolSequence& x, std::int64_t depth) {
  if (depth < 0) throw std::invalid_argument("ctw_log_prob: depth must be >= 0");
  CtwTree tree(depth);
  tree.append(x);
  return tree.log_prob();
}

double ctw_log_prob_infinite(const SymbolSequence& x) {
  CtwTree tree(-1);
  tree.append(x);
  return tree.log_prob();
}

EntropyValue ctw_entropy_estimate(const SymbolSequence& x, std::int64_t depth) {
  if (x.length() == 0) throw std::domain_error("ctw_entropy_estimate: empty input");
  CtwTree tree(depth < 0 ? -1 : depth);
  tree.append(x);
  return {-tree.log_prob() / static_cast<double>(x.length())};
}

}  // namespace entrokit
