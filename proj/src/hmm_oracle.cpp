#include "entrokit/hmm_oracle.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include <omp.h>

#include "entrokit/threads.hpp"

namespace entrokit {

double hmm_log_prob(const HmmSpec& spec, const SymbolSequence& x, int renorm_every) {
  validate(ProcessSpec(spec));
  if (renorm_every < 1) throw std::invalid_argument("hmm_log_prob: renorm_every must be >= 1");
  const std::size_t states = spec.state_count();
  const std::int64_t n = x.length();
  if (n == 0) return 0.0;

  const auto pi = stationary_distribution(spec.transition);

  std::vector<double> v(states), next(states);
  {
    const std::uint8_t s0 = x[0];
    if (s0 > 1) throw std::domain_error("hmm_log_prob: input must be binary");
    for (std::size_t y = 0; y < states; ++y) v[y] = pi[y] * spec.emission[y][s0];
  }
  double log_scale = 0.0;
  auto renormalize = [&]() -> bool {
    double sum = 0.0;
    for (double z : v) sum += z;
    if (sum <= 0.0) return false;
    log_scale += std::log2(sum);
    for (double& z : v) z /= sum;
    return true;
  };
  if (!renormalize()) return -std::numeric_limits<double>::infinity();

  for (std::int64_t k = 1; k < n; ++k) {
    const std::uint8_t sk = x[k];
    if (sk > 1) throw std::domain_error("hmm_log_prob: input must be binary");
    for (std::size_t yp = 0; yp < states; ++yp) {
      double acc = 0.0;
      for (std::size_t y = 0; y < states; ++y) acc += v[y] * spec.transition[y][yp];
      next[yp] = acc * spec.emission[yp][sk];
    }
    v.swap(next);
    if (k % renorm_every == 0 || k == n - 1) {
      if (!renormalize()) return -std::numeric_limits<double>::infinity();
    }
  }
  return log_scale;
}

HmmEntropyEstimate hmm_entropy_estimate(const HmmSpec& spec, std::int64_t n, int reps,
                                        RngSeed seed) {
  if (reps < 1) throw std::invalid_argument("hmm_entropy_estimate: reps must be >= 1");
  if (n < 1) throw std::invalid_argument("hmm_entropy_estimate: n must be >= 1");
  HmmEntropyEstimate out;
  out.per_rep.assign(static_cast<std::size_t>(reps), 0.0);
#pragma omp parallel for schedule(dynamic) num_threads(effective_threads())
  for (int r = 0; r < reps; ++r) {
    const auto x = generate(ProcessSpec(spec), n, RngSeed{seed.seed, seed.stream + static_cast<std::uint64_t>(r)});
    out.per_rep[static_cast<std::size_t>(r)] = -hmm_log_prob(spec, x) / static_cast<double>(n);
  }
  double mean = 0.0;
  for (double v : out.per_rep) mean += v;
  mean /= static_cast<double>(reps);
  double var = 0.0;
  for (double v : out.per_rep) var += (v - mean) * (v - mean);
  out.mean_bits = mean;
  out.stderr_bits = reps > 1 ? std::sqrt(var / (static_cast<double>(reps) - 1.0) / static_cast<double>(reps))
                             : 0.0;
  return out;
}

}  // namespace entrokit
