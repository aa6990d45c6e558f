#pragma once

#include <cstdint>

#include "entrokit/matchlen.hpp"
#include "entrokit/seqcore.hpp"

namespace entrokit {

/// Sliding-window estimator: [ (1/k) sum L_i / log2 n ]^{-1}.
EntropyValue h_hat_nk(const MatchLengthProfile& profile);

/// Sliding-window estimator: (1/k) sum log2 n / L_i. Never below h_hat_nk.
EntropyValue h_tilde_nk(const MatchLengthProfile& profile);

/// Increasing-window estimator over i = 2..n: [ (1/n) sum L_i / log2 i ]^{-1}.
/// The profile must start at position 2 and cover n-1 consecutive positions;
/// the 1/n prefactor is kept even though the sum has n-1 terms.
EntropyValue h_hat_n(const MatchLengthProfile& profile);

/// Increasing-window estimator: (1/n) sum log2 i / L_i.
EntropyValue h_tilde_n(const MatchLengthProfile& profile);

struct LzParams {
  std::int64_t n = 0;
  std::int64_t k = 0;
};

/// Window/match split for a data budget N: the largest n with
/// n + c*(log2 n)^2 <= N, and k = round(c*(log2 n)^2), at least 1.
LzParams suggest_params(std::int64_t total_length, double c = 1.0);

}  // namespace entrokit
