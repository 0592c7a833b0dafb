// Copyright 2026 The ANSAC Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <string>
#include <vector>

#include "ansac/baselines.hpp"
#include "ansac/estimator.hpp"
#include "ansac/synthdata.hpp"

namespace ansac {

/// Names accepted in BenchSpec::estimators.
const std::vector<std::string>& known_estimators();

/// One synthetic problem per trial (seeded from spec seed + trial index),
/// each named estimator run on it.
struct BenchSpec {
  SynthSpec synth;
  int trials = 100;
  std::vector<std::string> estimators = {"ansac", "ransac", "prosac"};
  AnsacConfig ansac;
  BaselineConfig baseline;
  /// Trials whose model_error is below this count as successes.
  /// 0 means "2 * inlier_threshold".
  double success_threshold = 0.0;
  /// Worker threads. Results are identical for any value >= 1 because every
  /// trial owns its RNG streams.
  int jobs = 1;
};

struct TrialRow {
  std::string estimator;
  int trial = 0;
  int iterations = 0;
  double best_inlier_ratio = 0.0;
  Termination termination = Termination::GlobalCeiling;
  /// Largest deviation of the estimated model from the planted truth,
  /// measured as the residual over the noiseless true-inlier pairs.
  double model_error = 0.0;
  bool success = false;
  /// Wall time of the estimation call in seconds. Reported only through
  /// the summary aggregates; the results CSV stays run-independent.
  double wall_time = 0.0;
};

struct EstimatorSummary {
  std::string name;
  double median_iterations = 0.0;
  double median_wall_ms = 0.0;
  double success_rate = 0.0;
  /// Mean best-so-far inlier ratio at iterations 1..curve.size(), each
  /// trial's history extended by its final value.
  std::vector<double> curve;
};

struct BenchResult {
  std::vector<TrialRow> rows;  // trial-major, estimators in spec order
  std::vector<EstimatorSummary> summaries;
};

/// Deviation of a model from the planted truth: max residual over the
/// noiseless true-inlier correspondences.
double model_truth_error(const Model& model, const SynthProblem& problem);

/// Runs the benchmark. Throws std::invalid_argument for unknown estimator
/// names (the message lists the valid ones).
BenchResult run_bench(const BenchSpec& spec);

/// Per-trial rows as CSV. Deterministic: depends only on the spec.
std::string results_csv(const BenchResult& result);

/// Per-estimator aggregates plus the spec echo as pretty-printed JSON.
std::string summary_json(const BenchSpec& spec, const BenchResult& result);

/// Seed streams: every trial draws its problem and its estimator runs from
/// independent deterministic seeds.
std::uint64_t trial_problem_seed(std::uint64_t seed, int trial);
std::uint64_t trial_estimator_seed(std::uint64_t seed, int trial);

}  // namespace ansac
