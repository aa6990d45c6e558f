#include "entrokit/renewal.hpp"

#include <algorithm>
#include <cmath>

namespace entrokit {

IsiSequence extract_isis(const SymbolSequence& x) {
  IsiSequence out;
  out.data_length = x.length();
  std::int64_t last_one = -1;
  for (std::int64_t t = 0; t < x.length(); ++t) {
    if (x[t] > 1) throw std::domain_error("extract_isis: input must be binary");
    if (x[t] == 1) {
      if (last_one >= 0) out.intervals.push_back(t - last_one);
      last_one = t;
      ++out.ones;
    }
  }
  if (out.ones < 2) {
    throw InsufficientEvents("extract_isis: need at least two 1s to form an interval");
  }
  return out;
}

EntropyValue renewal_entropy(const SymbolSequence& x) {
  const IsiSequence isis = extract_isis(x);
  const std::int64_t max_interval = *std::max_element(isis.intervals.begin(), isis.intervals.end());
  std::vector<std::int64_t> counts(static_cast<std::size_t>(max_interval), 0);
  for (std::int64_t v : isis.intervals) ++counts[static_cast<std::size_t>(v - 1)];
  const double m = static_cast<double>(isis.intervals.size());
  double h = 0.0;
  for (std::int64_t c : counts) {
    if (c > 0) {
      const double q = static_cast<double>(c) / m;
      h -= q * std::log2(q);
    }
  }
  return {isis.rate_hat() * h};
}

}  // namespace entrokit
