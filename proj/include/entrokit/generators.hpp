#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "entrokit/philox.hpp"
#include "entrokit/seqcore.hpp"

namespace entrokit {

/// Bernoulli(p) symbols, independent across time.
struct IidSpec {
  double p = 0.5;
};

/// Order-ell chain over an alphabet of size A. The transition table has
/// A^ell rows (row index = the last ell symbols packed base-A, most recent
/// symbol in the lowest digit) and A columns. An absent initial distribution
/// means "start from the stationary law of the block chain".
struct MarkovSpec {
  int order = 1;
  int alphabet_size = 2;
  std::vector<std::vector<double>> transition;
  std::optional<std::vector<double>> initial;
};

/// Binary observations driven by a hidden first-order chain started from its
/// stationary law. emission[y] = {P(x=0|y), P(x=1|y)}.
struct HmmSpec {
  std::vector<std::vector<double>> transition;
  std::vector<std::array<double, 2>> emission;

  /// Convenience: state y emits 1 with probability rates[y].
  static HmmSpec from_rates(const std::vector<double>& rates,
                            std::vector<std::vector<double>> transition);
  std::size_t state_count() const { return transition.size(); }
};

/// Binary renewal process: a 1 at every arrival, interarrival times drawn
/// i.i.d. from `isi` (isi[j] is the probability of an interval of j+1).
struct RenewalSpec {
  DiscreteDistribution isi;
};

using ProcessSpec = std::variant<IidSpec, MarkovSpec, HmmSpec, RenewalSpec>;

/// Validates the spec; throws std::invalid_argument with a diagnostic if a
/// stochastic matrix row does not sum to 1, a parameter is out of range, etc.
void validate(const ProcessSpec& spec);

/// Draws n symbols from the process. Identical (spec, n, seed) inputs give
/// identical output.
SymbolSequence generate(const ProcessSpec& spec, std::int64_t n, RngSeed seed);

/// Closed-form entropy rate where one exists; nullopt for HMMs (use
/// hmm_entropy_estimate). Markov chains without a unique stationary law
/// raise std::invalid_argument.
std::optional<EntropyValue> true_entropy_rate(const ProcessSpec& spec);

/// Interval probabilities p_j (j >= 1) obtained by integrating the mixture
/// mu*Gamma(a1,b1) + (1-mu)*Gamma(a2,b2) over unit intervals (j-1, j],
/// truncated once the residual tail mass drops below tail_tol and
/// renormalized.
DiscreteDistribution discretized_gamma_mixture(double mu, double alpha1, double beta1,
                                               double alpha2, double beta2,
                                               double tail_tol = 1e-9);

/// Unique stationary distribution of a row-stochastic matrix, by damped
/// power iteration to residual 1e-13. Throws std::invalid_argument when the
/// chain is reducible or periodic.
std::vector<double> stationary_distribution(const std::vector<std::vector<double>>& transition);

/// Stationary distribution over order-ell blocks of a Markov spec.
std::vector<double> stationary_block_distribution(const MarkovSpec& spec);

/// JSON (de)serialization of process specs; see README for the schema.
ProcessSpec process_spec_from_json_string(const std::string& text);
ProcessSpec process_spec_from_json_file(const std::string& path);
std::string process_spec_to_json_string(const ProcessSpec& spec);

}  // namespace entrokit
