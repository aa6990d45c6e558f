// entrokit: simulate binary processes and estimate their entropy rate.
//
// Exit codes: 0 success, 2 invalid configuration, 3 estimation failure.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "entrokit/bootstrap.hpp"
#include "entrokit/ctw.hpp"
#include "entrokit/generators.hpp"
#include "entrokit/harness.hpp"
#include "entrokit/hmm_oracle.hpp"
#include "entrokit/lz_estimators.hpp"
#include "entrokit/matchlen.hpp"
#include "entrokit/plugin_estimator.hpp"
#include "entrokit/renewal.hpp"

namespace {

using namespace entrokit;

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.10g", v);
  return buf;
}

struct GenerateArgs {
  std::string spec_path;
  std::int64_t n = 0;
  std::uint64_t seed = 0;
  std::uint64_t stream = 0;
  std::string out_path;
};

int run_generate(const GenerateArgs& a) {
  const ProcessSpec spec = process_spec_from_json_file(a.spec_path);
  const SymbolSequence x = generate(spec, a.n, RngSeed{a.seed, a.stream});
  write_sequence_file(a.out_path, x);
  return 0;
}

struct EstimateArgs {
  std::string method;
  std::string in_path;
  std::int64_t n = 0;
  std::int64_t k = 0;
  int w = 0;
  std::string depth = "inf";
  int alphabet = 2;
};

int run_estimate(const EstimateArgs& a) {
  const SymbolSequence x = read_sequence_file(a.in_path, a.alphabet);
  double value = 0.0;
  if (a.method == "hhat-nk" || a.method == "htilde-nk") {
    if (a.n < 2 || a.k < 1) throw std::invalid_argument("sliding-window methods need --n and --k");
    const auto profile = matching_statistics(x, WindowKind::Fixed, a.n, a.n, a.k);
    value = a.method == "hhat-nk" ? h_hat_nk(profile).bits : h_tilde_nk(profile).bits;
  } else if (a.method == "hhat-n" || a.method == "htilde-n") {
    const std::int64_t n = a.n > 0 ? a.n : x.length() / 2;
    if (n < 2 || 2 * n > x.length()) {
      throw std::invalid_argument("increasing-window methods need data of length >= 2n");
    }
    const auto profile = matching_statistics(x, WindowKind::Increasing, 0, 2, n - 1);
    value = a.method == "hhat-n" ? h_hat_n(profile).bits : h_tilde_n(profile).bits;
  } else if (a.method == "plugin") {
    if (a.w < 1) throw std::invalid_argument("plugin needs --w");
    value = plugin_entropy(x, a.w).bits;
  } else if (a.method == "ctw") {
    const std::int64_t depth = a.depth == "inf" ? -1 : std::stoll(a.depth);
    value = ctw_entropy_estimate(x, depth).bits;
  } else if (a.method == "renewal") {
    value = renewal_entropy(x).bits;
  } else {
    throw std::invalid_argument("unknown method: " + a.method);
  }
  std::cout << "method,estimate\n" << a.method << ',' << format_double(value) << '\n';
  return 0;
}

struct BootstrapArgs {
  std::string method = "hhat-nk";
  std::string in_path;
  std::int64_t n = 0;
  std::int64_t k = 0;
  int replicas = 1000;
  double p = 0.0;  // 0: choose from the autocorrelogram
  std::uint64_t seed = 0;
  int alphabet = 2;
};

int run_bootstrap(const BootstrapArgs& a) {
  if (a.method != "hhat-nk" && a.method != "htilde-nk") {
    throw std::invalid_argument("bootstrap applies to hhat-nk or htilde-nk");
  }
  if (a.n < 2 || a.k < 2) throw std::invalid_argument("bootstrap needs --n >= 2 and --k >= 2");
  const SymbolSequence x = read_sequence_file(a.in_path, a.alphabet);
  const auto profile = matching_statistics(x, WindowKind::Fixed, a.n, a.n, a.k);
  const LzKind kind = a.method == "hhat-nk" ? LzKind::Hat : LzKind::Tilde;
  const double estimate = kind == LzKind::Hat ? h_hat_nk(profile).bits : h_tilde_nk(profile).bits;
  BootstrapConfig cfg;
  cfg.replicas = a.replicas;
  cfg.block_param = a.p > 0.0 ? a.p : choose_block_param(profile);
  cfg.seed = RngSeed{a.seed, 0};
  const auto result = stationary_bootstrap_stderr(profile, kind, cfg);
  std::cout << "method,estimate,stderr,blockParam\n"
            << a.method << ',' << format_double(estimate) << ','
            << format_double(result.stderr_estimate) << ',' << format_double(cfg.block_param)
            << '\n';
  return 0;
}

struct HmmEntropyArgs {
  std::string spec_path;
  std::int64_t n = 0;
  int reps = 10;
  std::uint64_t seed = 0;
};

int run_hmm_entropy(const HmmEntropyArgs& a) {
  const ProcessSpec spec = process_spec_from_json_file(a.spec_path);
  if (!std::holds_alternative<HmmSpec>(spec)) {
    throw std::invalid_argument("hmm-entropy requires an hmm process spec");
  }
  const auto est = hmm_entropy_estimate(std::get<HmmSpec>(spec), a.n, a.reps, RngSeed{a.seed, 0});
  std::cout << "field,index,value\n";
  std::cout << "estimate,," << format_double(est.mean_bits) << '\n';
  std::cout << "stderr,," << format_double(est.stderr_bits) << '\n';
  for (std::size_t r = 0; r < est.per_rep.size(); ++r) {
    std::cout << "rep," << r << ',' << format_double(est.per_rep[r]) << '\n';
  }
  return 0;
}

struct ExperimentArgs {
  std::string plan_path;
  std::string out_path;
};

int run_experiment_cmd(const ExperimentArgs& a) {
  const PlanFile file = load_plan_file(a.plan_path);
  std::ofstream out_file;
  std::ostream* out = &std::cout;
  if (!a.out_path.empty()) {
    out_file.open(a.out_path);
    if (!out_file) throw std::invalid_argument("cannot open output file: " + a.out_path);
    out = &out_file;
  }
  if (file.curve_axis) {
    const auto points = bias_curve(file.plan, *file.curve_axis, file.curve_grid);
    write_curve_csv(*out, file.plan, *file.curve_axis, points);
  } else {
    const auto reports = run_experiment(file.plan);
    write_results_csv(*out, file.plan, reports);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"entropy-rate estimation toolkit"};
  app.require_subcommand(1);

  GenerateArgs gen;
  auto* cmd_gen = app.add_subcommand("generate", "simulate a process and write a sequence file");
  cmd_gen->add_option("--spec", gen.spec_path, "process spec JSON")->required();
  cmd_gen->add_option("--n", gen.n, "sequence length")->required();
  cmd_gen->add_option("--seed", gen.seed, "RNG seed");
  cmd_gen->add_option("--stream", gen.stream, "RNG stream id");
  cmd_gen->add_option("--out", gen.out_path, "output path")->required();

  EstimateArgs est;
  auto* cmd_est = app.add_subcommand("estimate", "run one estimator on a sequence file");
  cmd_est->add_option("--method", est.method,
                      "hhat-nk|htilde-nk|hhat-n|htilde-n|plugin|ctw|renewal")
      ->required();
  cmd_est->add_option("--in", est.in_path, "sequence file")->required();
  cmd_est->add_option("--n", est.n, "window length");
  cmd_est->add_option("--k", est.k, "number of match positions");
  cmd_est->add_option("--w", est.w, "plug-in word length");
  cmd_est->add_option("--depth", est.depth, "CTW depth (integer or 'inf')");
  cmd_est->add_option("--alphabet", est.alphabet, "alphabet size of the input");

  BootstrapArgs boot;
  auto* cmd_boot = app.add_subcommand("bootstrap", "estimate with a bootstrap standard error");
  cmd_boot->add_option("--method", boot.method, "hhat-nk|htilde-nk")->required();
  cmd_boot->add_option("--in", boot.in_path, "sequence file")->required();
  cmd_boot->add_option("--n", boot.n, "window length")->required();
  cmd_boot->add_option("--k", boot.k, "number of match positions")->required();
  cmd_boot->add_option("--B", boot.replicas, "bootstrap replicas");
  cmd_boot->add_option("--p", boot.p, "block parameter (default: from autocorrelogram)");
  cmd_boot->add_option("--seed", boot.seed, "RNG seed");
  cmd_boot->add_option("--alphabet", boot.alphabet, "alphabet size of the input");

  HmmEntropyArgs hmm;
  auto* cmd_hmm = app.add_subcommand("hmm-entropy", "entropy rate of a known HMM");
  cmd_hmm->add_option("--spec", hmm.spec_path, "HMM spec JSON")->required();
  cmd_hmm->add_option("--n", hmm.n, "realization length")->required();
  cmd_hmm->add_option("--reps", hmm.reps, "number of realizations");
  cmd_hmm->add_option("--seed", hmm.seed, "RNG seed");

  ExperimentArgs exp;
  auto* cmd_exp = app.add_subcommand("experiment", "run an experiment plan, emit CSV");
  cmd_exp->add_option("--plan", exp.plan_path, "plan JSON")->required();
  cmd_exp->add_option("--out", exp.out_path, "output CSV (default stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (cmd_gen->parsed()) return run_generate(gen);
    if (cmd_est->parsed()) return run_estimate(est);
    if (cmd_boot->parsed()) return run_bootstrap(boot);
    if (cmd_hmm->parsed()) return run_hmm_entropy(hmm);
    if (cmd_exp->parsed()) return run_experiment_cmd(exp);
  } catch (const std::logic_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  }
  return 0;
}
