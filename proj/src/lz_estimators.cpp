#include "entrokit/lz_estimators.hpp"

#include <cmath>
#include <stdexcept>

namespace entrokit {

namespace {

void require_fixed(const MatchLengthProfile& profile) {
  if (profile.kind != WindowKind::Fixed) {
    throw std::invalid_argument("estimator requires a fixed-window profile");
  }
  if (profile.window < 2) {
    throw std::domain_error("estimator requires window length n >= 2");
  }
  if (profile.count() < 1) {
    throw std::domain_error("estimator requires at least one match length");
  }
}

void require_increasing(const MatchLengthProfile& profile) {
  if (profile.kind != WindowKind::Increasing) {
    throw std::invalid_argument("estimator requires an increasing-window profile");
  }
  if (profile.first_position != 2 || profile.count() < 1) {
    throw std::domain_error("increasing-window profile must cover i = 2..n");
  }
}

}  // namespace

EntropyValue h_hat_nk(const MatchLengthProfile& profile) {
  require_fixed(profile);
  const double log_n = std::log2(static_cast<double>(profile.window));
  double sum = 0.0;
  for (std::int32_t L : profile.values) sum += static_cast<double>(L);
  const double mean_ratio = sum / static_cast<double>(profile.count()) / log_n;
  return {1.0 / mean_ratio};
}

EntropyValue h_tilde_nk(const MatchLengthProfile& profile) {
  require_fixed(profile);
  const double log_n = std::log2(static_cast<double>(profile.window));
  double sum = 0.0;
  for (std::int32_t L : profile.values) sum += log_n / static_cast<double>(L);
  return {sum / static_cast<double>(profile.count())};
}

EntropyValue h_hat_n(const MatchLengthProfile& profile) {
  require_increasing(profile);
  const std::int64_t n = profile.first_position + profile.count() - 1;
  if (n < 2) throw std::domain_error("h_hat_n: n must be >= 2");
  double sum = 0.0;
  for (std::int64_t i = 2; i <= n; ++i) {
    sum += static_cast<double>(profile.values[static_cast<std::size_t>(i - 2)]) /
           std::log2(static_cast<double>(i));
  }
  return {static_cast<double>(n) / sum};
}

EntropyValue h_tilde_n(const MatchLengthProfile& profile) {
  require_increasing(profile);
  const std::int64_t n = profile.first_position + profile.count() - 1;
  if (n < 2) throw std::domain_error("h_tilde_n: n must be >= 2");
  double sum = 0.0;
  for (std::int64_t i = 2; i <= n; ++i) {
    sum += std::log2(static_cast<double>(i)) /
           static_cast<double>(profile.values[static_cast<std::size_t>(i - 2)]);
  }
  return {sum / static_cast<double>(n)};
}

LzParams suggest_params(std::int64_t total_length, double c) {
  if (total_length < 100) throw std::invalid_argument("suggest_params: need at least 100 symbols");
  if (!(c > 0.0)) throw std::invalid_argument("suggest_params: c must be positive");
  auto cost = [&](std::int64_t n) {
    const double lg = std::log2(static_cast<double>(n));
    return static_cast<double>(n) + c * lg * lg;
  };
  // cost is increasing in n: binary search for the largest feasible n.
  std::int64_t lo = 2, hi = total_length;
  while (lo < hi) {
    const std::int64_t mid = lo + (hi - lo + 1) / 2;
    if (cost(mid) <= static_cast<double>(total_length)) {
      lo = mid;
    } else {
      hi = mid - 1;
    }
  }
  const double lg = std::log2(static_cast<double>(lo));
  std::int64_t k = static_cast<std::int64_t>(std::llround(c * lg * lg));
  if (k < 1) k = 1;
  if (lo + k > total_length) k = std::max<std::int64_t>(1, total_length - lo);
  return {lo, k};
}

}  // namespace entrokit
