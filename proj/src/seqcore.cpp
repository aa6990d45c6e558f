#include "entrokit/seqcore.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace entrokit {

SymbolSequence::SymbolSequence(std::vector<std::uint8_t> symbols, int alphabet_size)
    : symbols_(std::move(symbols)), alphabet_size_(alphabet_size) {
  if (alphabet_size_ < 2) {
    throw std::invalid_argument("SymbolSequence: alphabet_size must be >= 2");
  }
  for (std::uint8_t s : symbols_) {
    if (s >= alphabet_size_) {
      throw std::invalid_argument("SymbolSequence: symbol out of range");
    }
  }
}

DiscreteDistribution::DiscreteDistribution(std::vector<double> probabilities)
    : p_(std::move(probabilities)) {
  double sum = 0.0;
  for (double v : p_) {
    if (!(v >= 0.0)) {
      throw std::domain_error("DiscreteDistribution: negative entry");
    }
    sum += v;
  }
  if (std::abs(sum - 1.0) > 1e-9) {
    throw std::domain_error("DiscreteDistribution: entries must sum to 1");
  }
}

DiscreteDistribution DiscreteDistribution::from_weights(const std::vector<double>& weights) {
  double sum = 0.0;
  for (double w : weights) {
    if (!(w >= 0.0)) {
      throw std::domain_error("DiscreteDistribution: negative weight");
    }
    sum += w;
  }
  if (sum <= 0.0) {
    throw std::domain_error("DiscreteDistribution: total weight is zero");
  }
  std::vector<double> p(weights.size());
  for (std::size_t i = 0; i < weights.size(); ++i) p[i] = weights[i] / sum;
  return DiscreteDistribution(std::move(p));
}

EntropyValue binary_entropy(double p) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::domain_error("binary_entropy: p must lie in [0,1]");
  }
  double h = 0.0;
  if (p > 0.0) h -= p * std::log2(p);
  if (p < 1.0) h -= (1.0 - p) * std::log2(1.0 - p);
  return {h};
}

EntropyValue shannon_entropy(const DiscreteDistribution& d) {
  double h = 0.0;
  for (double v : d.probabilities()) {
    if (v > 0.0) h -= v * std::log2(v);
  }
  return {h};
}

SymbolSequence read_sequence_file(const std::string& path, int alphabet_size) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw std::runtime_error("cannot open sequence file: " + path);
  }
  std::vector<std::uint8_t> symbols;
  char c;
  while (in.get(c)) {
    if (c == ' ' || c == '\n' || c == '\r' || c == '\t') continue;
    if (c < '0' || c > '9') {
      throw std::runtime_error("sequence file contains a non-digit character: " + path);
    }
    symbols.push_back(static_cast<std::uint8_t>(c - '0'));
  }
  return SymbolSequence(std::move(symbols), alphabet_size);
}

void write_sequence_file(const std::string& path, const SymbolSequence& x) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw std::runtime_error("cannot open output file: " + path);
  }
  constexpr std::int64_t kLineWidth = 4096;
  std::string line;
  line.reserve(kLineWidth + 1);
  for (std::int64_t i = 0; i < x.length(); ++i) {
    line.push_back(static_cast<char>('0' + x[i]));
    if (static_cast<std::int64_t>(line.size()) == kLineWidth) {
      line.push_back('\n');
      out.write(line.data(), static_cast<std::streamsize>(line.size()));
      line.clear();
    }
  }
  if (!line.empty()) {
    line.push_back('\n');
    out.write(line.data(), static_cast<std::streamsize>(line.size()));
  }
}

}  // namespace entrokit
