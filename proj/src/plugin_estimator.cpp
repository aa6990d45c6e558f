#include "entrokit/plugin_estimator.hpp"

#include <cmath>
#include <stdexcept>

namespace entrokit {

WordHistogram word_histogram(const SymbolSequence& x, int w) {
  const std::int64_t n = x.length();
  if (w < 1) throw std::domain_error("word_histogram: w must be >= 1");
  if (w > n) throw std::domain_error("word_histogram: w exceeds the data length");
  const double key_bits = static_cast<double>(w) * std::log2(static_cast<double>(x.alphabet_size()));
  if (key_bits > 62.0) {
    throw std::length_error("word_histogram: alphabet^w does not fit a packed 64-bit key");
  }
  const std::uint64_t base = static_cast<std::uint64_t>(x.alphabet_size());
  std::uint64_t modulus = 1;
  for (int j = 0; j < w - 1; ++j) modulus *= base;

  WordHistogram h;
  h.word_length = w;
  h.total_windows = n - w + 1;
  h.counts.reserve(static_cast<std::size_t>(std::min<std::int64_t>(h.total_windows, 1 << 20)));

  std::uint64_t key = 0;
  for (std::int64_t i = 0; i < w; ++i) key = key * base + x[i];
  ++h.counts[key];
  for (std::int64_t i = w; i < n; ++i) {
    key = (key % modulus) * base + x[i];
    ++h.counts[key];
  }
  return h;
}

EntropyValue plugin_entropy(const WordHistogram& histogram) {
  if (histogram.total_windows <= 0 || histogram.word_length < 1) {
    throw std::domain_error("plugin_entropy: empty histogram");
  }
  const double total = static_cast<double>(histogram.total_windows);
  double h = 0.0;
  for (const auto& [key, count] : histogram.counts) {
    (void)key;
    const double p = static_cast<double>(count) / total;
    h -= p * std::log2(p);
  }
  return {h / static_cast<double>(histogram.word_length)};
}

EntropyValue plugin_entropy(const SymbolSequence& x, int w) {
  return plugin_entropy(word_histogram(x, w));
}

}  // namespace entrokit
