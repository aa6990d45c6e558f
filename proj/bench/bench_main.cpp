// Microbenchmarks for the hot kernels. Each indexed/parallel kernel is
// paired with the exhaustive or single-thread version it replaces; run with
// ENTROKIT_THREADS unset so the thread sweep takes effect.

#include <benchmark/benchmark.h>

#include <omp.h>

#include "entrokit/bootstrap.hpp"
#include "entrokit/ctw.hpp"
#include "entrokit/generators.hpp"
#include "entrokit/hmm_oracle.hpp"
#include "entrokit/lz_estimators.hpp"
#include "entrokit/matchlen.hpp"

using namespace entrokit;

namespace {

SymbolSequence iid_data(std::int64_t n, double p = 0.25) {
  return generate(IidSpec{p}, n, {42, 0});
}

void BM_match_profile_reference(benchmark::State& state) {
  const std::int64_t n = state.range(0);
  const std::int64_t k = n / 4;
  const auto x = iid_data(2 * n + k);
  for (auto _ : state) {
    auto profile = matching_statistics_reference(x, WindowKind::Fixed, n, n, k);
    benchmark::DoNotOptimize(profile.values.data());
  }
  state.SetItemsProcessed(state.iterations() * k);
}
BENCHMARK(BM_match_profile_reference)->Arg(1 << 10)->Arg(1 << 13)->Unit(benchmark::kMillisecond);

void BM_match_profile_indexed(benchmark::State& state) {
  const std::int64_t n = state.range(0);
  const std::int64_t k = n / 4;
  omp_set_num_threads(static_cast<int>(state.range(1)));
  const auto x = iid_data(2 * n + k);
  for (auto _ : state) {
    auto profile = matching_statistics(x, WindowKind::Fixed, n, n, k);
    benchmark::DoNotOptimize(profile.values.data());
  }
  state.SetItemsProcessed(state.iterations() * k);
}
BENCHMARK(BM_match_profile_indexed)
    ->Args({1 << 10, 1})
    ->Args({1 << 13, 1})
    ->Args({1 << 20, 1})
    ->Args({1 << 20, 2})
    ->Unit(benchmark::kMillisecond);

void BM_increasing_profile_indexed(benchmark::State& state) {
  const std::int64_t n = state.range(0);
  omp_set_num_threads(static_cast<int>(state.range(1)));
  const auto x = iid_data(2 * n);
  for (auto _ : state) {
    auto profile = matching_statistics(x, WindowKind::Increasing, 0, 2, n - 1);
    benchmark::DoNotOptimize(profile.values.data());
  }
  state.SetItemsProcessed(state.iterations() * n);
}
BENCHMARK(BM_increasing_profile_indexed)
    ->Args({1 << 19, 1})
    ->Args({1 << 19, 2})
    ->Unit(benchmark::kMillisecond);

void BM_ctw_unbounded(benchmark::State& state) {
  const auto x = iid_data(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(ctw_log_prob_infinite(x));
  }
  state.SetItemsProcessed(state.iterations() * x.length());
}
BENCHMARK(BM_ctw_unbounded)->Arg(1 << 16)->Arg(1 << 20)->Unit(benchmark::kMillisecond);

void BM_hmm_forward(benchmark::State& state) {
  const double eps = 0.001;
  const auto spec = HmmSpec::from_rates(
      {0.005, 0.02, 0.05}, {{1 - eps, eps / 2, eps / 2}, {eps / 2, 1 - eps, eps / 2},
                            {eps / 2, eps / 2, 1 - eps}});
  const auto x = generate(ProcessSpec(spec), state.range(0), {7, 0});
  for (auto _ : state) {
    benchmark::DoNotOptimize(hmm_log_prob(spec, x));
  }
  state.SetItemsProcessed(state.iterations() * x.length());
}
BENCHMARK(BM_hmm_forward)->Arg(1 << 20)->Unit(benchmark::kMillisecond);

void BM_bootstrap_stderr(benchmark::State& state) {
  omp_set_num_threads(static_cast<int>(state.range(0)));
  const std::int64_t n = 1000, k = 10000;
  const auto x = iid_data(2 * n + k);
  const auto profile = matching_statistics(x, WindowKind::Fixed, n, n, k);
  BootstrapConfig cfg;
  cfg.replicas = 1000;
  cfg.block_param = 0.2;
  cfg.seed = {3, 0};
  for (auto _ : state) {
    benchmark::DoNotOptimize(stationary_bootstrap_stderr(profile, LzKind::Hat, cfg).stderr_estimate);
  }
}
BENCHMARK(BM_bootstrap_stderr)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
