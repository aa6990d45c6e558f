#pragma once

#include <cstdint>
#include <unordered_map>

#include "entrokit/seqcore.hpp"

namespace entrokit {

/// Counts of all overlapping length-w words, keyed by the word packed
/// base-alphabet into 64 bits (sparse; only observed words are stored).
struct WordHistogram {
  std::unordered_map<std::uint64_t, std::int64_t> counts;
  std::int64_t total_windows = 0;
  int word_length = 0;
};

WordHistogram word_histogram(const SymbolSequence& x, int w);

/// Plug-in (maximum-likelihood) estimator: (1/w) times the entropy of the
/// empirical w-word distribution over all n-w+1 overlapping windows.
EntropyValue plugin_entropy(const SymbolSequence& x, int w);
EntropyValue plugin_entropy(const WordHistogram& histogram);

}  // namespace entrokit
