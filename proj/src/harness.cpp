#include "entrokit/harness.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "entrokit/ctw.hpp"
#include "entrokit/hmm_oracle.hpp"
#include "entrokit/lz_estimators.hpp"
#include "entrokit/matchlen.hpp"
#include "entrokit/plugin_estimator.hpp"
#include "entrokit/renewal.hpp"
#include "entrokit/threads.hpp"

namespace entrokit {

namespace {

constexpr std::uint64_t kTruthStreamBase = std::uint64_t{1} << 40;

bool is_fixed_lz(const std::string& m) { return m == "hhat-nk" || m == "htilde-nk"; }
bool is_increasing_lz(const std::string& m) { return m == "hhat-n" || m == "htilde-n"; }

std::int64_t increasing_n(const EstimatorConfig& cfg, std::int64_t data_length) {
  return cfg.n > 0 ? cfg.n : data_length / 2;
}

void validate_estimator(const EstimatorConfig& cfg, std::int64_t data_length) {
  const std::string& m = cfg.method;
  if (is_fixed_lz(m)) {
    if (cfg.n < 2 || cfg.k < 1) {
      throw std::invalid_argument(m + ": requires n >= 2 and k >= 1");
    }
    if (cfg.n + cfg.k > data_length) {
      throw std::invalid_argument(m + ": n + k exceeds the data length");
    }
  } else if (is_increasing_lz(m)) {
    const std::int64_t n = increasing_n(cfg, data_length);
    if (n < 2) throw std::invalid_argument(m + ": requires n >= 2");
    if (2 * n > data_length) throw std::invalid_argument(m + ": requires data length >= 2n");
  } else if (m == "plugin") {
    if (cfg.w < 1) throw std::invalid_argument("plugin: requires w >= 1");
    if (cfg.w > data_length) throw std::invalid_argument("plugin: w exceeds the data length");
  } else if (m == "ctw") {
    // any depth accepted; negative means unbounded
  } else if (m == "renewal") {
    // no parameters
  } else {
    throw std::invalid_argument("unknown estimator method: " + m);
  }
}

// Profiles shared between estimators within one repetition.
struct RepResources {
  const SymbolSequence& x;
  std::unique_ptr<MatchIndex> index;
  std::map<std::pair<std::int64_t, std::int64_t>, MatchLengthProfile> fixed;
  std::map<std::int64_t, MatchLengthProfile> increasing;

  explicit RepResources(const SymbolSequence& data) : x(data) {}

  MatchIndex& match_index() {
    if (!index) index = std::make_unique<MatchIndex>(x);
    return *index;
  }
  const MatchLengthProfile& fixed_profile(std::int64_t n, std::int64_t k) {
    auto it = fixed.find({n, k});
    if (it == fixed.end()) {
      it = fixed.emplace(std::make_pair(n, k), match_index().fixed_profile(n, n, k)).first;
    }
    return it->second;
  }
  const MatchLengthProfile& increasing_profile(std::int64_t n) {
    auto it = increasing.find(n);
    if (it == increasing.end()) {
      it = increasing.emplace(n, match_index().increasing_profile(2, n - 1)).first;
    }
    return it->second;
  }
};

double run_estimator(const EstimatorConfig& cfg, RepResources& res, std::int64_t data_length) {
  const std::string& m = cfg.method;
  if (m == "hhat-nk") return h_hat_nk(res.fixed_profile(cfg.n, cfg.k)).bits;
  if (m == "htilde-nk") return h_tilde_nk(res.fixed_profile(cfg.n, cfg.k)).bits;
  if (m == "hhat-n") return h_hat_n(res.increasing_profile(increasing_n(cfg, data_length))).bits;
  if (m == "htilde-n") return h_tilde_n(res.increasing_profile(increasing_n(cfg, data_length))).bits;
  if (m == "plugin") return plugin_entropy(res.x, cfg.w).bits;
  if (m == "ctw") return ctw_entropy_estimate(res.x, cfg.depth).bits;
  if (m == "renewal") return renewal_entropy(res.x).bits;
  throw std::invalid_argument("unknown estimator method: " + m);
}

}  // namespace

void validate(const ExperimentPlan& plan) {
  validate(plan.spec);
  if (plan.repetitions < 1) throw std::invalid_argument("plan: repetitions must be >= 1");
  if (plan.data_length < 100) throw std::invalid_argument("plan: data_length must be >= 100");
  if (plan.estimators.empty()) throw std::invalid_argument("plan: no estimators configured");
  if (plan.hmm_truth_reps < 1) throw std::invalid_argument("plan: hmm_truth_reps must be >= 1");
  for (const auto& cfg : plan.estimators) validate_estimator(cfg, plan.data_length);
}

std::vector<EstimateReport> run_experiment(const ExperimentPlan& plan) {
  validate(plan);

  bool has_truth = false;
  double truth = 0.0;
  if (plan.truth) {
    has_truth = true;
    truth = *plan.truth;
  } else if (std::holds_alternative<HmmSpec>(plan.spec)) {
    // Resolved once per plan, on realizations independent of the estimator reps.
    const auto est = hmm_entropy_estimate(std::get<HmmSpec>(plan.spec), plan.data_length,
                                          plan.hmm_truth_reps, RngSeed{plan.seed, kTruthStreamBase});
    has_truth = true;
    truth = est.mean_bits;
  } else if (const auto h = true_entropy_rate(plan.spec)) {
    has_truth = true;
    truth = h->bits;
  }

  const int reps = plan.repetitions;
  const std::size_t n_est = plan.estimators.size();
  std::vector<std::vector<double>> estimates(n_est, std::vector<double>(static_cast<std::size_t>(reps)));

#pragma omp parallel for schedule(dynamic) num_threads(effective_threads())
  for (int r = 0; r < reps; ++r) {
    const SymbolSequence x =
        generate(plan.spec, plan.data_length, RngSeed{plan.seed, static_cast<std::uint64_t>(r)});
    RepResources res(x);
    for (std::size_t e = 0; e < n_est; ++e) {
      double value;
      try {
        value = run_estimator(plan.estimators[e], res, plan.data_length);
      } catch (const std::exception&) {
        value = std::numeric_limits<double>::quiet_NaN();
      }
      estimates[e][static_cast<std::size_t>(r)] = value;
    }
  }

  std::vector<EstimateReport> reports;
  reports.reserve(n_est);
  for (std::size_t e = 0; e < n_est; ++e) {
    EstimateReport rep;
    rep.config = plan.estimators[e];
    rep.per_rep = estimates[e];
    rep.has_truth = has_truth;
    rep.truth = truth;
    double sum = 0.0;
    int ok = 0;
    for (double v : rep.per_rep) {
      if (std::isnan(v)) {
        ++rep.failures;
      } else {
        sum += v;
        ++ok;
      }
    }
    if (ok > 0) {
      rep.mean = sum / ok;
      double var = 0.0, mse = 0.0;
      for (double v : rep.per_rep) {
        if (std::isnan(v)) continue;
        var += (v - rep.mean) * (v - rep.mean);
        if (has_truth) mse += (v - truth) * (v - truth);
      }
      rep.stderr_estimate = ok > 1 ? std::sqrt(var / (ok - 1)) : std::numeric_limits<double>::quiet_NaN();
      rep.bias = has_truth ? rep.mean - truth : std::numeric_limits<double>::quiet_NaN();
      rep.rmse = has_truth ? std::sqrt(mse / ok) : std::numeric_limits<double>::quiet_NaN();
    } else {
      rep.mean = rep.bias = rep.stderr_estimate = rep.rmse = std::numeric_limits<double>::quiet_NaN();
    }
    reports.push_back(std::move(rep));
  }
  return reports;
}

std::vector<CurvePoint> bias_curve(const ExperimentPlan& plan, CurveAxis axis,
                                   const std::vector<std::int64_t>& grid) {
  if (grid.empty()) throw std::invalid_argument("bias_curve: empty grid");
  std::vector<CurvePoint> points;
  for (std::size_t gi = 0; gi < grid.size(); ++gi) {
    const std::int64_t g = grid[gi];
    ExperimentPlan sub = plan;
    sub.seed = plan.seed + 1000003 * (static_cast<std::uint64_t>(gi) + 1);
    std::int64_t needed = 0;
    for (auto& cfg : sub.estimators) {
      if (is_fixed_lz(cfg.method)) {
        if (axis == CurveAxis::InvSqrtK) {
          cfg.k = g;
        } else {
          cfg.n = g;
        }
        needed = std::max(needed, 2 * cfg.n + cfg.k);
      } else if (is_increasing_lz(cfg.method)) {
        if (axis != CurveAxis::InvSqrtK) cfg.n = g;
        needed = std::max(needed, 2 * increasing_n(cfg, 0));
      }
    }
    if (needed == 0) {
      // No window-based estimator: interpret the grid as data lengths.
      needed = g;
    }
    sub.data_length = needed;
    const auto reports = run_experiment(sub);
    for (const auto& rep : reports) {
      CurvePoint pt;
      pt.estimator = rep.config.method;
      pt.n = is_increasing_lz(rep.config.method) ? increasing_n(rep.config, sub.data_length)
                                                 : rep.config.n;
      pt.k = rep.config.k;
      switch (axis) {
        case CurveAxis::InvLogN:
          pt.axis_value = 1.0 / std::log2(static_cast<double>(g));
          break;
        case CurveAxis::InvSqrtK:
          pt.axis_value = 1.0 / std::sqrt(static_cast<double>(g));
          break;
        case CurveAxis::InvSqrtN:
          pt.axis_value = 1.0 / std::sqrt(static_cast<double>(g));
          break;
      }
      pt.bias = rep.bias;
      pt.stderr_estimate = rep.stderr_estimate;
      points.push_back(std::move(pt));
    }
  }
  return points;
}

namespace {

std::string format_double(double v) {
  if (std::isnan(v)) return "NA";
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.10g", v);
  return buf;
}

std::string ratio_pct(double value, double truth, bool has_truth) {
  if (!has_truth || !(truth > 0.0) || std::isnan(value)) return "NA";
  return format_double(100.0 * value / truth);
}

}  // namespace

void write_results_csv(std::ostream& out, const ExperimentPlan& plan,
                       const std::vector<EstimateReport>& reports) {
  out << "model,estimator,n,k,w,D,estimate,truth,bias,stderr,rmse,biasPct,stderrPct,rmsePct\n";
  for (const auto& rep : reports) {
    const auto& cfg = rep.config;
    out << plan.model_name << ',' << cfg.method << ',';
    if (is_fixed_lz(cfg.method)) {
      out << cfg.n << ',' << cfg.k << ",,";
    } else if (is_increasing_lz(cfg.method)) {
      out << increasing_n(cfg, plan.data_length) << ",,,";
    } else if (cfg.method == "plugin") {
      out << ",," << cfg.w << ',';
    } else if (cfg.method == "ctw") {
      out << ",,,";
      if (cfg.depth < 0) {
        out << "inf";
      } else {
        out << cfg.depth;
      }
    } else {
      out << ",,,";
    }
    out << ',' << format_double(rep.mean) << ','
        << (rep.has_truth ? format_double(rep.truth) : "NA") << ','
        << format_double(rep.has_truth ? rep.bias : std::numeric_limits<double>::quiet_NaN()) << ','
        << format_double(rep.stderr_estimate) << ','
        << format_double(rep.has_truth ? rep.rmse : std::numeric_limits<double>::quiet_NaN()) << ','
        << ratio_pct(rep.bias, rep.truth, rep.has_truth) << ','
        << ratio_pct(rep.stderr_estimate, rep.truth, rep.has_truth) << ','
        << ratio_pct(rep.rmse, rep.truth, rep.has_truth) << '\n';
  }
}

void write_curve_csv(std::ostream& out, const ExperimentPlan& plan, CurveAxis axis,
                     const std::vector<CurvePoint>& points) {
  const char* axis_name = axis == CurveAxis::InvLogN     ? "inv-log-n"
                          : axis == CurveAxis::InvSqrtK ? "inv-sqrt-k"
                                                        : "inv-sqrt-n";
  out << "model,axis,axisValue,estimator,n,k,bias,stderr\n";
  for (const auto& pt : points) {
    out << plan.model_name << ',' << axis_name << ',' << format_double(pt.axis_value) << ','
        << pt.estimator << ',' << pt.n << ',' << pt.k << ',' << format_double(pt.bias) << ','
        << format_double(pt.stderr_estimate) << '\n';
  }
}

namespace {

using nlohmann::json;

EstimatorConfig estimator_from_json(const json& j) {
  EstimatorConfig cfg;
  cfg.method = j.at("method").get<std::string>();
  cfg.n = j.value("n", std::int64_t{0});
  cfg.k = j.value("k", std::int64_t{0});
  cfg.w = j.value("w", 0);
  if (j.contains("depth")) {
    if (j["depth"].is_string()) {
      cfg.depth = -1;  // "inf"
    } else {
      cfg.depth = j["depth"].get<std::int64_t>();
    }
  }
  return cfg;
}

}  // namespace

PlanFile load_plan_string(const std::string& text) {
  json j = json::parse(text);
  PlanFile out;
  ExperimentPlan& plan = out.plan;
  plan.model_name = j.value("name", std::string("process"));
  plan.spec = process_spec_from_json_string(j.at("process").dump());
  if (j.contains("truth") && j["truth"].is_number()) {
    plan.truth = j["truth"].get<double>();
  }
  for (const auto& e : j.at("estimators")) plan.estimators.push_back(estimator_from_json(e));
  plan.repetitions = j.value("repetitions", 50);
  plan.data_length = j.at("data_length").get<std::int64_t>();
  plan.seed = j.value("seed", std::uint64_t{0});
  plan.hmm_truth_reps = j.value("hmm_truth_reps", 10);
  if (j.contains("curve")) {
    const std::string axis = j["curve"].at("axis").get<std::string>();
    if (axis == "inv-log-n") {
      out.curve_axis = CurveAxis::InvLogN;
    } else if (axis == "inv-sqrt-k") {
      out.curve_axis = CurveAxis::InvSqrtK;
    } else if (axis == "inv-sqrt-n") {
      out.curve_axis = CurveAxis::InvSqrtN;
    } else {
      throw std::invalid_argument("unknown curve axis: " + axis);
    }
    out.curve_grid = j["curve"].at("grid").get<std::vector<std::int64_t>>();
  }
  return out;
}

PlanFile load_plan_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open plan file: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return load_plan_string(ss.str());
}

LinearFit linear_fit(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2) {
    throw std::invalid_argument("linear_fit: need matching vectors with >= 2 points");
  }
  const double n = static_cast<double>(x.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0, syy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sx += x[i];
    sy += y[i];
    sxx += x[i] * x[i];
    sxy += x[i] * y[i];
    syy += y[i] * y[i];
  }
  LinearFit fit;
  const double denom = n * sxx - sx * sx;
  fit.slope = (n * sxy - sx * sy) / denom;
  fit.intercept = (sy - fit.slope * sx) / n;
  double ss_res = 0.0;
  const double mean_y = sy / n;
  double ss_tot = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double pred = fit.slope * x[i] + fit.intercept;
    ss_res += (y[i] - pred) * (y[i] - pred);
    ss_tot += (y[i] - mean_y) * (y[i] - mean_y);
  }
  fit.r_squared = ss_tot > 0.0 ? 1.0 - ss_res / ss_tot : 1.0;
  return fit;
}

}  // namespace entrokit
