#pragma once

#include <cstdint>
#include <vector>

#include "entrokit/generators.hpp"
#include "entrokit/seqcore.hpp"

namespace entrokit {

/// Exact log2-probability of a binary string under a known HMM started from
/// the stationary law of its hidden chain. The forward row vector is
/// renormalized every `renorm_every` steps and the log2 normalizers are
/// accumulated, so there is no underflow for any input length. An impossible
/// string yields -infinity.
double hmm_log_prob(const HmmSpec& spec, const SymbolSequence& x, int renorm_every = 1);

struct HmmEntropyEstimate {
  double mean_bits = 0.0;    // average of -(1/n) log2 p over realizations
  double stderr_bits = 0.0;  // sample standard error of that mean
  std::vector<double> per_rep;
};

/// Near-exact entropy rate of the HMM: average of -(1/n) log2 p(x) over
/// `reps` independent realizations of length n.
HmmEntropyEstimate hmm_entropy_estimate(const HmmSpec& spec, std::int64_t n, int reps,
                                        RngSeed seed);

}  // namespace entrokit
