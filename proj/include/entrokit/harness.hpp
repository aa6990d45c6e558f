#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "entrokit/generators.hpp"
#include "entrokit/seqcore.hpp"

namespace entrokit {

/// One estimator to run. Fields other than `method` apply only where they
/// make sense: (n, k) for the sliding-window estimators, n for the
/// increasing-window ones (0 = half the data length), w for the plug-in,
/// depth for CTW (-1 = unbounded).
struct EstimatorConfig {
  std::string method;
  std::int64_t n = 0;
  std::int64_t k = 0;
  int w = 0;
  std::int64_t depth = -1;
};

struct ExperimentPlan {
  std::string model_name = "process";
  ProcessSpec spec;
  std::optional<double> truth;  // absent: resolve analytically or via the HMM oracle
  std::vector<EstimatorConfig> estimators;
  int repetitions = 50;
  std::int64_t data_length = 0;
  std::uint64_t seed = 0;
  int hmm_truth_reps = 10;
};

struct EstimateReport {
  EstimatorConfig config;
  std::vector<double> per_rep;  // NaN marks a failed repetition
  int failures = 0;
  bool has_truth = false;
  double truth = 0.0;
  double mean = 0.0;
  double bias = 0.0;
  double stderr_estimate = 0.0;  // sample std over repetitions
  double rmse = 0.0;             // sqrt(mean squared error against truth)

  int successes() const { return static_cast<int>(per_rep.size()) - failures; }
};

void validate(const ExperimentPlan& plan);

/// Generates `repetitions` realizations, applies every estimator to each,
/// and aggregates bias / stderr / rmse against the resolved truth.
/// Deterministic for a given plan and seed.
std::vector<EstimateReport> run_experiment(const ExperimentPlan& plan);

enum class CurveAxis { InvLogN, InvSqrtK, InvSqrtN };

struct CurvePoint {
  double axis_value = 0.0;
  std::int64_t n = 0;
  std::int64_t k = 0;
  std::string estimator;
  double bias = 0.0;
  double stderr_estimate = 0.0;
};

/// Re-runs the plan across a grid of window lengths (or match counts for
/// InvSqrtK) and reports one (axis value, bias, stderr) row per estimator
/// and grid point. Data lengths follow the estimator geometry: 2n+k for the
/// sliding window, 2n for the increasing window.
std::vector<CurvePoint> bias_curve(const ExperimentPlan& plan, CurveAxis axis,
                                   const std::vector<std::int64_t>& grid);

void write_results_csv(std::ostream& out, const ExperimentPlan& plan,
                       const std::vector<EstimateReport>& reports);
void write_curve_csv(std::ostream& out, const ExperimentPlan& plan, CurveAxis axis,
                     const std::vector<CurvePoint>& points);

struct PlanFile {
  ExperimentPlan plan;
  std::optional<CurveAxis> curve_axis;
  std::vector<std::int64_t> curve_grid;
};

PlanFile load_plan_file(const std::string& path);
PlanFile load_plan_string(const std::string& text);

/// Least-squares fit diagnostics for bias/stderr trend checks.
struct LinearFit {
  double slope = 0.0;
  double intercept = 0.0;
  double r_squared = 0.0;
};
LinearFit linear_fit(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace entrokit
