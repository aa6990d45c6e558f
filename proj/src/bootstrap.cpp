#include "entrokit/bootstrap.hpp"

#include <cmath>
#include <stdexcept>

#include "entrokit/lz_estimators.hpp"
#include "entrokit/threads.hpp"

namespace entrokit {

BootstrapBlock sample_block(PhiloxRng& rng, std::int64_t k, double p) {
  BootstrapBlock block;
  block.start = static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(k)));
  block.length = rng.geometric(p);
  return block;
}

std::vector<std::int32_t> build_bootstrap_replica(const std::vector<std::int32_t>& values,
                                                  double p, PhiloxRng& rng) {
  const std::int64_t k = static_cast<std::int64_t>(values.size());
  std::vector<std::int32_t> replica(values.size());
  std::int64_t filled = 0;
  while (filled < k) {
    const BootstrapBlock block = sample_block(rng, k, p);
    const std::int64_t take = std::min(block.length, k - filled);
    for (std::int64_t j = 0; j < take; ++j) {
      replica[static_cast<std::size_t>(filled + j)] =
          values[static_cast<std::size_t>((block.start + j) % k)];
    }
    filled += take;
  }
  return replica;
}

BootstrapResult stationary_bootstrap_stderr(const MatchLengthProfile& profile, LzKind kind,
                                            const BootstrapConfig& config) {
  if (profile.kind != WindowKind::Fixed) {
    throw std::invalid_argument("stationary_bootstrap_stderr: fixed-window profiles only");
  }
  const std::int64_t k = profile.count();
  if (k < 2) throw std::domain_error("stationary_bootstrap_stderr: need at least two match lengths");
  if (config.replicas < 2) throw std::invalid_argument("stationary_bootstrap_stderr: B must be >= 2");
  if (!(config.block_param > 0.0 && config.block_param <= 1.0)) {
    throw std::invalid_argument("stationary_bootstrap_stderr: block parameter must lie in (0,1]");
  }

  BootstrapResult out;
  out.replica_estimates.assign(static_cast<std::size_t>(config.replicas), 0.0);

#pragma omp parallel num_threads(effective_threads())
  {
    MatchLengthProfile replica;
    replica.kind = WindowKind::Fixed;
    replica.window = profile.window;
    replica.first_position = profile.first_position;
#pragma omp for schedule(static)
    for (int m = 0; m < config.replicas; ++m) {
      PhiloxRng rng(config.seed.seed, config.seed.stream + static_cast<std::uint64_t>(m) + 1);
      replica.values = build_bootstrap_replica(profile.values, config.block_param, rng);
      out.replica_estimates[static_cast<std::size_t>(m)] =
          kind == LzKind::Hat ? h_hat_nk(replica).bits : h_tilde_nk(replica).bits;
    }
  }

  double mean = 0.0;
  bool all_equal = true;
  for (double v : out.replica_estimates) {
    mean += v;
    all_equal = all_equal && v == out.replica_estimates.front();
  }
  mean /= static_cast<double>(config.replicas);
  double var = 0.0;
  for (double v : out.replica_estimates) var += (v - mean) * (v - mean);
  var /= static_cast<double>(config.replicas - 1);
  out.replica_mean = mean;
  out.stderr_estimate = all_equal ? 0.0 : std::sqrt(var);
  return out;
}

double choose_block_param(const MatchLengthProfile& profile, double band_factor,
                          std::int64_t max_lag) {
  const std::int64_t k = profile.count();
  if (k < 30) throw std::domain_error("choose_block_param: need at least 30 match lengths");
  double mean = 0.0;
  for (std::int32_t v : profile.values) mean += static_cast<double>(v);
  mean /= static_cast<double>(k);
  double var = 0.0;
  for (std::int32_t v : profile.values) {
    const double d = static_cast<double>(v) - mean;
    var += d * d;
  }
  if (var == 0.0) return 1.0;  // constant sequence: no dependence to preserve

  const double band = band_factor / std::sqrt(static_cast<double>(k));
  const std::int64_t lag_cap = std::min<std::int64_t>(k - 1, max_lag);
  for (std::int64_t h = 1; h <= lag_cap; ++h) {
    double acc = 0.0;
    for (std::int64_t i = 0; i + h < k; ++i) {
      acc += (static_cast<double>(profile.values[static_cast<std::size_t>(i)]) - mean) *
             (static_cast<double>(profile.values[static_cast<std::size_t>(i + h)]) - mean);
    }
    const double rho = acc / var;
    if (std::abs(rho) < band) return 1.0 / static_cast<double>(h);
  }
  return 1.0 / static_cast<double>(lag_cap);
}

}  // namespace entrokit
