#include "entrokit/generators.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <queue>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include <boost/math/special_functions/gamma.hpp>

#include <json.hpp>

namespace entrokit {

namespace {

constexpr double kRowSumTol = 1e-9;

void check_stochastic_row(const std::vector<double>& row, const char* what) {
  double sum = 0.0;
  for (double v : row) {
    if (!(v >= 0.0)) throw std::invalid_argument(std::string(what) + ": negative entry");
    sum += v;
  }
  if (std::abs(sum - 1.0) > kRowSumTol) {
    throw std::invalid_argument(std::string(what) + ": row does not sum to 1");
  }
}

std::int64_t ipow(std::int64_t base, int exp) {
  std::int64_t r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

// Inverse-CDF draw from a cumulative table (strictly increasing to ~1).
std::size_t draw_from_cdf(PhiloxRng& rng, const std::vector<double>& cdf) {
  const double u = rng.uniform01();
  auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
  if (it == cdf.end()) return cdf.size() - 1;
  return static_cast<std::size_t>(it - cdf.begin());
}

std::vector<double> cumulative(const std::vector<double>& p) {
  std::vector<double> cdf(p.size());
  double acc = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    acc += p[i];
    cdf[i] = acc;
  }
  return cdf;
}

// Strong connectivity and aperiodicity of the support graph.
void check_ergodic(const std::vector<std::vector<double>>& P) {
  const std::size_t s = P.size();
  auto bfs = [&](bool forward) {
    std::vector<char> seen(s, 0);
    std::queue<std::size_t> q;
    q.push(0);
    seen[0] = 1;
    while (!q.empty()) {
      std::size_t u = q.front();
      q.pop();
      for (std::size_t v = 0; v < s; ++v) {
        const double w = forward ? P[u][v] : P[v][u];
        if (w > 0.0 && !seen[v]) {
          seen[v] = 1;
          q.push(v);
        }
      }
    }
    return seen;
  };
  auto fwd = bfs(true);
  auto bwd = bfs(false);
  for (std::size_t v = 0; v < s; ++v) {
    if (!fwd[v] || !bwd[v]) {
      throw std::invalid_argument("markov chain is reducible: no unique stationary distribution");
    }
  }
  // Period = gcd over edges of (dist[u] + 1 - dist[v]) on a BFS tree.
  std::vector<std::int64_t> dist(s, -1);
  std::queue<std::size_t> q;
  q.push(0);
  dist[0] = 0;
  while (!q.empty()) {
    std::size_t u = q.front();
    q.pop();
    for (std::size_t v = 0; v < s; ++v) {
      if (P[u][v] > 0.0 && dist[v] < 0) {
        dist[v] = dist[u] + 1;
        q.push(v);
      }
    }
  }
  std::int64_t g = 0;
  for (std::size_t u = 0; u < s; ++u) {
    for (std::size_t v = 0; v < s; ++v) {
      if (P[u][v] > 0.0) g = std::gcd(g, dist[u] + 1 - dist[v]);
    }
  }
  if (std::llabs(g) != 1) {
    throw std::invalid_argument("markov chain is periodic: stationary solve is not well posed");
  }
}

}  // namespace

HmmSpec HmmSpec::from_rates(const std::vector<double>& rates,
                            std::vector<std::vector<double>> transition) {
  HmmSpec spec;
  spec.transition = std::move(transition);
  spec.emission.reserve(rates.size());
  for (double r : rates) {
    if (!(r > 0.0 && r < 1.0)) {
      throw std::invalid_argument("HmmSpec: emission rate must lie in (0,1)");
    }
    spec.emission.push_back({1.0 - r, r});
  }
  return spec;
}

void validate(const ProcessSpec& spec) {
  std::visit(
      [](const auto& s) {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, IidSpec>) {
          if (!(s.p >= 0.0 && s.p <= 1.0)) {
            throw std::invalid_argument("IidSpec: p must lie in [0,1]");
          }
        } else if constexpr (std::is_same_v<T, MarkovSpec>) {
          if (s.order < 1) throw std::invalid_argument("MarkovSpec: order must be >= 1");
          if (s.alphabet_size < 2) throw std::invalid_argument("MarkovSpec: alphabet_size must be >= 2");
          const std::int64_t rows = ipow(s.alphabet_size, s.order);
          if (static_cast<std::int64_t>(s.transition.size()) != rows) {
            throw std::invalid_argument("MarkovSpec: transition table must have alphabet^order rows");
          }
          for (const auto& row : s.transition) {
            if (static_cast<int>(row.size()) != s.alphabet_size) {
              throw std::invalid_argument("MarkovSpec: transition row has wrong width");
            }
            check_stochastic_row(row, "MarkovSpec transition");
          }
          if (s.initial) {
            if (static_cast<std::int64_t>(s.initial->size()) != rows) {
              throw std::invalid_argument("MarkovSpec: initial distribution has wrong size");
            }
            check_stochastic_row(*s.initial, "MarkovSpec initial");
          }
        } else if constexpr (std::is_same_v<T, HmmSpec>) {
          const std::size_t states = s.transition.size();
          if (states == 0) throw std::invalid_argument("HmmSpec: empty state set");
          for (const auto& row : s.transition) {
            if (row.size() != states) throw std::invalid_argument("HmmSpec: transition not square");
            check_stochastic_row(row, "HmmSpec transition");
          }
          if (s.emission.size() != states) {
            throw std::invalid_argument("HmmSpec: emission table must have one row per state");
          }
          for (const auto& e : s.emission) {
            std::vector<double> row{e[0], e[1]};
            check_stochastic_row(row, "HmmSpec emission");
          }
        } else if constexpr (std::is_same_v<T, RenewalSpec>) {
          if (s.isi.size() == 0) throw std::invalid_argument("RenewalSpec: empty ISI distribution");
        }
      },
      spec);
}

std::vector<double> stationary_distribution(const std::vector<std::vector<double>>& P) {
  const std::size_t s = P.size();
  for (const auto& row : P) check_stochastic_row(row, "stationary_distribution");
  check_ergodic(P);
  std::vector<double> v(s, 1.0 / static_cast<double>(s)), next(s);
  constexpr double kResidualTol = 1e-13;
  constexpr int kMaxIters = 200000;
  for (int iter = 0; iter < kMaxIters; ++iter) {
    // Damped step: v <- v * (I + P)/2. Damping removes oscillation without
    // moving the fixed point.
    for (std::size_t j = 0; j < s; ++j) next[j] = 0.5 * v[j];
    for (std::size_t i = 0; i < s; ++i) {
      const double vi = 0.5 * v[i];
      if (vi == 0.0) continue;
      for (std::size_t j = 0; j < s; ++j) next[j] += vi * P[i][j];
    }
    double residual = 0.0;
    for (std::size_t j = 0; j < s; ++j) residual += std::abs(next[j] - v[j]);
    v.swap(next);
    if (residual < kResidualTol) {
      double sum = std::accumulate(v.begin(), v.end(), 0.0);
      for (double& x : v) x /= sum;
      return v;
    }
  }
  throw std::invalid_argument("stationary_distribution: power iteration did not converge");
}

std::vector<double> stationary_block_distribution(const MarkovSpec& s) {
  const int A = s.alphabet_size;
  const std::int64_t states = ipow(A, s.order);
  std::vector<std::vector<double>> block(static_cast<std::size_t>(states),
                                         std::vector<double>(static_cast<std::size_t>(states), 0.0));
  const std::int64_t mod = ipow(A, s.order - 1);
  for (std::int64_t r = 0; r < states; ++r) {
    for (int a = 0; a < A; ++a) {
      const std::int64_t nxt = (r % mod) * A + a;
      block[static_cast<std::size_t>(r)][static_cast<std::size_t>(nxt)] +=
          s.transition[static_cast<std::size_t>(r)][static_cast<std::size_t>(a)];
    }
  }
  return stationary_distribution(block);
}

namespace {

SymbolSequence generate_iid(const IidSpec& s, std::int64_t n, RngSeed seed) {
  PhiloxRng rng(seed.seed, seed.stream);
  std::vector<std::uint8_t> x(static_cast<std::size_t>(n));
  for (auto& v : x) v = rng.bernoulli(s.p) ? 1 : 0;
  return SymbolSequence(std::move(x), 2);
}

SymbolSequence generate_markov(const MarkovSpec& s, std::int64_t n, RngSeed seed) {
  PhiloxRng rng(seed.seed, seed.stream);
  const int A = s.alphabet_size;
  const std::int64_t states = ipow(A, s.order);
  std::vector<double> init;
  if (s.initial) {
    init = *s.initial;
  } else {
    init = stationary_block_distribution(s);
  }
  std::vector<std::vector<double>> row_cdf(static_cast<std::size_t>(states));
  for (std::int64_t r = 0; r < states; ++r) {
    row_cdf[static_cast<std::size_t>(r)] = cumulative(s.transition[static_cast<std::size_t>(r)]);
  }
  const auto init_cdf = cumulative(init);

  std::vector<std::uint8_t> x;
  x.reserve(static_cast<std::size_t>(n));
  // Unpack the initial block; lowest digit is the most recent symbol.
  std::int64_t state = static_cast<std::int64_t>(draw_from_cdf(rng, init_cdf));
  std::vector<std::uint8_t> block(static_cast<std::size_t>(s.order));
  std::int64_t tmp = state;
  for (int j = 0; j < s.order; ++j) {
    block[static_cast<std::size_t>(s.order - 1 - j)] = static_cast<std::uint8_t>(tmp % A);
    tmp /= A;
  }
  for (std::uint8_t b : block) {
    if (static_cast<std::int64_t>(x.size()) < n) x.push_back(b);
  }
  while (static_cast<std::int64_t>(x.size()) < n) {
    const auto next =
        static_cast<std::uint8_t>(draw_from_cdf(rng, row_cdf[static_cast<std::size_t>(state)]));
    x.push_back(next);
    state = (state % ipow(A, s.order - 1)) * A + next;
  }
  return SymbolSequence(std::move(x), A);
}

SymbolSequence generate_hmm(const HmmSpec& s, std::int64_t n, RngSeed seed) {
  PhiloxRng rng(seed.seed, seed.stream);
  const auto pi = stationary_distribution(s.transition);
  const auto pi_cdf = cumulative(pi);
  std::vector<std::vector<double>> row_cdf(s.state_count());
  for (std::size_t y = 0; y < s.state_count(); ++y) row_cdf[y] = cumulative(s.transition[y]);

  std::vector<std::uint8_t> x(static_cast<std::size_t>(n));
  std::size_t y = draw_from_cdf(rng, pi_cdf);
  for (std::int64_t t = 0; t < n; ++t) {
    if (t > 0) y = draw_from_cdf(rng, row_cdf[y]);
    x[static_cast<std::size_t>(t)] = rng.bernoulli(s.emission[y][1]) ? 1 : 0;
  }
  return SymbolSequence(std::move(x), 2);
}

SymbolSequence generate_renewal(const RenewalSpec& s, std::int64_t n, RngSeed seed) {
  PhiloxRng rng(seed.seed, seed.stream);
  const auto cdf = cumulative(s.isi.probabilities());
  std::vector<std::uint8_t> x(static_cast<std::size_t>(n), 0);
  // Each realization opens with a full interarrival interval.
  std::int64_t t = -1;
  for (;;) {
    t += static_cast<std::int64_t>(draw_from_cdf(rng, cdf)) + 1;
    if (t >= n) break;
    x[static_cast<std::size_t>(t)] = 1;
  }
  return SymbolSequence(std::move(x), 2);
}

}  // namespace

SymbolSequence generate(const ProcessSpec& spec, std::int64_t n, RngSeed seed) {
  if (n < 1) throw std::invalid_argument("generate: n must be >= 1");
  validate(spec);
  return std::visit(
      [&](const auto& s) -> SymbolSequence {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, IidSpec>) return generate_iid(s, n, seed);
        if constexpr (std::is_same_v<T, MarkovSpec>) return generate_markov(s, n, seed);
        if constexpr (std::is_same_v<T, HmmSpec>) return generate_hmm(s, n, seed);
        if constexpr (std::is_same_v<T, RenewalSpec>) return generate_renewal(s, n, seed);
      },
      spec);
}

std::optional<EntropyValue> true_entropy_rate(const ProcessSpec& spec) {
  validate(spec);
  return std::visit(
      [](const auto& s) -> std::optional<EntropyValue> {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, IidSpec>) {
          return binary_entropy(s.p);
        } else if constexpr (std::is_same_v<T, MarkovSpec>) {
          const auto pi = stationary_block_distribution(s);
          double h = 0.0;
          for (std::size_t r = 0; r < pi.size(); ++r) {
            double hr = 0.0;
            for (double q : s.transition[r]) {
              if (q > 0.0) hr -= q * std::log2(q);
            }
            h += pi[r] * hr;
          }
          return EntropyValue{h};
        } else if constexpr (std::is_same_v<T, HmmSpec>) {
          return std::nullopt;
        } else {
          // Renewal: lambda * H(ISI), lambda = 1 / E[interval].
          double mean = 0.0;
          for (std::size_t j = 0; j < s.isi.size(); ++j) {
            mean += static_cast<double>(j + 1) * s.isi[j];
          }
          return EntropyValue{shannon_entropy(s.isi).bits / mean};
        }
      },
      spec);
}

DiscreteDistribution discretized_gamma_mixture(double mu, double alpha1, double beta1,
                                               double alpha2, double beta2, double tail_tol) {
  if (!(mu > 0.0 && mu < 1.0)) throw std::invalid_argument("gamma mixture: mu must lie in (0,1)");
  if (!(alpha1 > 0.0 && beta1 > 0.0 && alpha2 > 0.0 && beta2 > 0.0)) {
    throw std::invalid_argument("gamma mixture: shapes and scales must be positive");
  }
  if (!(tail_tol > 0.0 && tail_tol <= 1e-6)) {
    throw std::invalid_argument("gamma mixture: tail_tol must lie in (0, 1e-6]");
  }
  auto mix_cdf = [&](double x) {
    return mu * boost::math::gamma_p(alpha1, x / beta1) +
           (1.0 - mu) * boost::math::gamma_p(alpha2, x / beta2);
  };
  std::vector<double> mass;
  double prev = 0.0;
  constexpr std::int64_t kMaxSupport = 100000000;
  for (std::int64_t j = 1;; ++j) {
    const double c = mix_cdf(static_cast<double>(j));
    mass.push_back(c - prev);
    prev = c;
    if (1.0 - c < tail_tol) break;
    if (j >= kMaxSupport) {
      throw std::invalid_argument("gamma mixture: support truncation exceeded limit");
    }
  }
  return DiscreteDistribution::from_weights(mass);
}

namespace {

using nlohmann::json;

std::vector<std::vector<double>> matrix_from_json(const json& j) {
  std::vector<std::vector<double>> m;
  for (const auto& row : j) m.push_back(row.get<std::vector<double>>());
  return m;
}

}  // namespace

ProcessSpec process_spec_from_json_string(const std::string& text) {
  json j = json::parse(text);
  const std::string type = j.at("type").get<std::string>();
  ProcessSpec spec;
  if (type == "iid") {
    spec = IidSpec{j.at("p").get<double>()};
  } else if (type == "markov") {
    MarkovSpec m;
    m.order = j.at("order").get<int>();
    m.alphabet_size = j.value("alphabet_size", 2);
    m.transition = matrix_from_json(j.at("transition"));
    if (j.contains("initial") && !j.at("initial").is_string()) {
      m.initial = j.at("initial").get<std::vector<double>>();
    }
    spec = std::move(m);
  } else if (type == "hmm") {
    HmmSpec h;
    auto transition = matrix_from_json(j.at("transition"));
    if (j.contains("rates")) {
      h = HmmSpec::from_rates(j.at("rates").get<std::vector<double>>(), std::move(transition));
    } else {
      h.transition = std::move(transition);
      for (const auto& row : j.at("emission")) {
        h.emission.push_back({row[0].get<double>(), row[1].get<double>()});
      }
    }
    spec = std::move(h);
  } else if (type == "renewal") {
    RenewalSpec r;
    if (j.contains("isi")) {
      r.isi = DiscreteDistribution::from_weights(j.at("isi").get<std::vector<double>>());
    } else {
      const auto& g = j.at("gamma_mixture");
      r.isi = discretized_gamma_mixture(g.at("mu").get<double>(), g.at("alpha1").get<double>(),
                                        g.at("beta1").get<double>(), g.at("alpha2").get<double>(),
                                        g.at("beta2").get<double>(), g.value("tail_tol", 1e-9));
    }
    spec = std::move(r);
  } else {
    throw std::invalid_argument("unknown process type: " + type);
  }
  validate(spec);
  return spec;
}

ProcessSpec process_spec_from_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open spec file: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return process_spec_from_json_string(ss.str());
}

std::string process_spec_to_json_string(const ProcessSpec& spec) {
  json j;
  std::visit(
      [&](const auto& s) {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, IidSpec>) {
          j = {{"type", "iid"}, {"p", s.p}};
        } else if constexpr (std::is_same_v<T, MarkovSpec>) {
          j = {{"type", "markov"},
               {"order", s.order},
               {"alphabet_size", s.alphabet_size},
               {"transition", s.transition}};
          if (s.initial) j["initial"] = *s.initial;
        } else if constexpr (std::is_same_v<T, HmmSpec>) {
          std::vector<std::vector<double>> emission;
          for (const auto& e : s.emission) emission.push_back({e[0], e[1]});
          j = {{"type", "hmm"}, {"transition", s.transition}, {"emission", emission}};
        } else {
          j = {{"type", "renewal"}, {"isi", s.isi.probabilities()}};
        }
      },
      spec);
  return j.dump(2);
}

}  // namespace entrokit
