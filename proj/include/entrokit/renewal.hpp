#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "entrokit/seqcore.hpp"

namespace entrokit {

/// Raised when fewer than two 1s are available, so no interval exists.
class InsufficientEvents : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Interarrival intervals between consecutive 1s. Symbols before the first 1
/// and after the last 1 contribute no interval. rate_hat is the fraction of
/// 1s over the whole input length.
struct IsiSequence {
  std::vector<std::int64_t> intervals;
  std::int64_t ones = 0;
  std::int64_t data_length = 0;

  double rate_hat() const { return static_cast<double>(ones) / static_cast<double>(data_length); }
};

IsiSequence extract_isis(const SymbolSequence& x);

/// Renewal entropy estimator: rate_hat times the entropy of the empirical
/// interval distribution.
EntropyValue renewal_entropy(const SymbolSequence& x);

}  // namespace entrokit
