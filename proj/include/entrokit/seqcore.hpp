#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace entrokit {

/// A finite-alphabet symbol sequence. Symbols are integers in
/// [0, alphabet_size); binary sequences (alphabet_size == 2) are the
/// common case throughout the toolkit.
class SymbolSequence {
 public:
  SymbolSequence() = default;
  SymbolSequence(std::vector<std::uint8_t> symbols, int alphabet_size);

  const std::vector<std::uint8_t>& symbols() const { return symbols_; }
  int alphabet_size() const { return alphabet_size_; }
  std::int64_t length() const { return static_cast<std::int64_t>(symbols_.size()); }
  std::uint8_t operator[](std::int64_t i) const { return symbols_[static_cast<std::size_t>(i)]; }
  const std::uint8_t* data() const { return symbols_.data(); }

 private:
  std::vector<std::uint8_t> symbols_;
  int alphabet_size_ = 2;
};

/// A probability vector; support labels are implicit by index.
/// Entries must be nonnegative and sum to 1 within 1e-9.
class DiscreteDistribution {
 public:
  DiscreteDistribution() = default;
  explicit DiscreteDistribution(std::vector<double> probabilities);

  const std::vector<double>& probabilities() const { return p_; }
  std::size_t size() const { return p_.size(); }
  double operator[](std::size_t i) const { return p_[i]; }

  /// Normalizes a vector of nonnegative weights (e.g. empirical counts).
  static DiscreteDistribution from_weights(const std::vector<double>& weights);

 private:
  std::vector<double> p_;
};

/// An entropy or entropy-rate value in bits per symbol.
struct EntropyValue {
  double bits = 0.0;
};

/// -p log2 p - (1-p) log2 (1-p), with 0 log 0 := 0. Throws std::domain_error
/// for p outside [0,1].
EntropyValue binary_entropy(double p);

/// -sum p_i log2 p_i with 0 log 0 := 0.
EntropyValue shannon_entropy(const DiscreteDistribution& d);

/// Reads a sequence file: one ASCII digit per symbol, whitespace ignored.
SymbolSequence read_sequence_file(const std::string& path, int alphabet_size = 2);

/// Writes a sequence as ASCII digits, line-wrapped, newline-terminated.
void write_sequence_file(const std::string& path, const SymbolSequence& x);

}  // namespace entrokit
