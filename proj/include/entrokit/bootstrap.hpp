#pragma once

#include <cstdint>
#include <vector>

#include "entrokit/matchlen.hpp"
#include "entrokit/philox.hpp"

namespace entrokit {

enum class LzKind { Hat, Tilde };

struct BootstrapConfig {
  int replicas = 1000;
  double block_param = 1.0;  // geometric block-length parameter p in (0,1]
  RngSeed seed;
};

struct BootstrapResult {
  double stderr_estimate = 0.0;
  double replica_mean = 0.0;
  std::vector<double> replica_estimates;
};

/// One bootstrap block: uniform start in [0,k), geometric length (mean 1/p).
struct BootstrapBlock {
  std::int64_t start = 0;
  std::int64_t length = 0;
};
BootstrapBlock sample_block(PhiloxRng& rng, std::int64_t k, double p);

/// One resampled match-length series of exactly length k: blocks drawn by
/// sample_block, copied with circular wrap-around, last block truncated.
std::vector<std::int32_t> build_bootstrap_replica(const std::vector<std::int32_t>& values,
                                                  double p, PhiloxRng& rng);

/// Stationary-bootstrap standard error of the fixed-window estimators.
/// Each replica resequences the match lengths by concatenating blocks
/// (wrapping circularly, truncated to total length k), then re-evaluates the
/// chosen estimator; the result is the sample standard deviation over
/// replicas.
BootstrapResult stationary_bootstrap_stderr(const MatchLengthProfile& profile, LzKind kind,
                                            const BootstrapConfig& config);

/// Block parameter from the autocorrelogram of the match lengths: the
/// reciprocal of the smallest lag whose autocorrelation falls inside the
/// +-band_factor/sqrt(k) noise band.
double choose_block_param(const MatchLengthProfile& profile, double band_factor = 2.0,
                          std::int64_t max_lag = 10000);

}  // namespace entrokit
