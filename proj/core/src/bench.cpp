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

#include "ansac/bench.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "ansac/io.hpp"
#include "ansac/sampler.hpp"

namespace ansac {

const std::vector<std::string>& known_estimators() {
  static const std::vector<std::string> names = {"ansac", "ransac", "prosac"};
  return names;
}

std::uint64_t trial_problem_seed(std::uint64_t seed, int trial) {
  return mix_seed(seed, 2 * static_cast<std::uint64_t>(trial));
}

std::uint64_t trial_estimator_seed(std::uint64_t seed, int trial) {
  return mix_seed(seed, 2 * static_cast<std::uint64_t>(trial) + 1);
}

double model_truth_error(const Model& model, const SynthProblem& problem) {
  double worst = 0.0;
  for (std::size_t j = 0; j < problem.clean.size(); ++j) {
    if (!problem.truth_mask[j]) continue;
    worst = std::max(worst, residual(model, problem.clean[j]));
  }
  return worst;
}

namespace {

double median(std::vector<double> values) {
  if (values.empty()) return 0.0;
  std::sort(values.begin(), values.end());
  const std::size_t mid = values.size() / 2;
  if (values.size() % 2 == 1) return values[mid];
  return 0.5 * (values[mid - 1] + values[mid]);
}

void validate_names(const std::vector<std::string>& names) {
  const auto& known = known_estimators();
  for (const auto& name : names) {
    if (std::find(known.begin(), known.end(), name) == known.end()) {
      std::string valid;
      for (const auto& k : known) {
        if (!valid.empty()) valid += ", ";
        valid += k;
      }
      throw std::invalid_argument("unknown estimator '" + name +
                                  "' (valid: " + valid + ")");
    }
  }
}

EstimationReport run_one(const std::string& name, const SynthProblem& problem,
                         const BenchSpec& spec, std::uint64_t run_seed) {
  if (name == "ansac") {
    AnsacConfig cfg = spec.ansac;
    cfg.seed = run_seed;
    return ansac_estimate(problem.corrs, spec.synth.kind,
                          QualityKind::Precomputed01, cfg);
  }
  BaselineConfig cfg = spec.baseline;
  cfg.seed = run_seed;
  if (name == "ransac") {
    return ransac_estimate(problem.corrs, spec.synth.kind, cfg);
  }
  return prosac_estimate(problem.corrs, spec.synth.kind,
                         QualityKind::Precomputed01, cfg);
}

}  // namespace

BenchResult run_bench(const BenchSpec& spec) {
  if (spec.trials < 1) throw std::invalid_argument("trials must be >= 1");
  validate_names(spec.estimators);
  const double success_threshold =
      spec.success_threshold > 0.0
          ? spec.success_threshold
          : 2.0 * spec.ansac.residual.inlier_threshold;

  const std::size_t per_trial = spec.estimators.size();
  BenchResult result;
  result.rows.resize(static_cast<std::size_t>(spec.trials) * per_trial);
  std::vector<std::vector<double>> histories(result.rows.size());

  const auto worker_body = [&](int trial) {
    SynthSpec synth = spec.synth;
    synth.seed = trial_problem_seed(spec.synth.seed, trial);
    const SynthProblem problem = generate(synth);
    const std::uint64_t run_seed =
        trial_estimator_seed(spec.synth.seed, trial);
    for (std::size_t e = 0; e < per_trial; ++e) {
      const auto& name = spec.estimators[e];
      const EstimationReport report = run_one(name, problem, spec, run_seed);
      TrialRow row;
      row.estimator = name;
      row.trial = trial;
      row.iterations = report.iterations_executed;
      row.best_inlier_ratio = report.best_inlier_ratio;
      row.termination = report.termination;
      row.model_error = model_truth_error(report.best_model, problem);
      row.success = row.model_error < success_threshold;
      row.wall_time = report.wall_time;
      const std::size_t slot =
          static_cast<std::size_t>(trial) * per_trial + e;
      result.rows[slot] = std::move(row);
      histories[slot] = report.epsilon_history;
    }
  };

  const int jobs = std::max(1, spec.jobs);
  if (jobs == 1) {
    for (int t = 0; t < spec.trials; ++t) worker_body(t);
  } else {
    std::atomic<int> next{0};
    std::vector<std::thread> threads;
    threads.reserve(static_cast<std::size_t>(jobs));
    for (int j = 0; j < jobs; ++j) {
      threads.emplace_back([&] {
        for (int t = next.fetch_add(1); t < spec.trials;
             t = next.fetch_add(1)) {
          worker_body(t);
        }
      });
    }
    for (auto& th : threads) th.join();
  }

  // Per-estimator aggregates.
  for (std::size_t e = 0; e < per_trial; ++e) {
    EstimatorSummary summary;
    summary.name = spec.estimators[e];
    std::vector<double> iters, walls;
    int successes = 0;
    std::size_t longest = 0;
    for (int t = 0; t < spec.trials; ++t) {
      const std::size_t slot = static_cast<std::size_t>(t) * per_trial + e;
      iters.push_back(static_cast<double>(result.rows[slot].iterations));
      walls.push_back(result.rows[slot].wall_time * 1000.0);
      successes += result.rows[slot].success ? 1 : 0;
      longest = std::max(longest, histories[slot].size());
    }
    summary.median_iterations = median(std::move(iters));
    summary.median_wall_ms = median(std::move(walls));
    summary.success_rate =
        static_cast<double>(successes) / static_cast<double>(spec.trials);
    summary.curve.assign(longest, 0.0);
    for (int t = 0; t < spec.trials; ++t) {
      const auto& h =
          histories[static_cast<std::size_t>(t) * per_trial + e];
      for (std::size_t i = 0; i < longest; ++i) {
        const double v = h.empty() ? 0.0 : h[std::min(i, h.size() - 1)];
        summary.curve[i] += v / static_cast<double>(spec.trials);
      }
    }
    result.summaries.push_back(std::move(summary));
  }
  return result;
}

std::string results_csv(const BenchResult& result) {
  std::ostringstream out;
  out << "estimator,trial,iterations,inlier_ratio,termination,model_error,"
         "success\n";
  for (const auto& row : result.rows) {
    out << row.estimator << ',' << row.trial << ',' << row.iterations << ','
        << format_double(row.best_inlier_ratio) << ','
        << to_string(row.termination) << ','
        << format_double(row.model_error) << ',' << (row.success ? 1 : 0)
        << '\n';
  }
  return out.str();
}

std::string summary_json(const BenchSpec& spec, const BenchResult& result) {
  nlohmann::json j;
  j["spec"] = {
      {"model",
       spec.synth.kind == ModelKind::Homography ? "homography" : "fundamental"},
      {"n", spec.synth.n},
      {"inlier_ratio", spec.synth.inlier_ratio},
      {"noise_sigma", spec.synth.noise_sigma},
      {"rho", spec.synth.quality_fidelity},
      {"trials", spec.trials},
      {"seed", spec.synth.seed},
      {"inlier_threshold", spec.ansac.residual.inlier_threshold},
      {"success_threshold",
       spec.success_threshold > 0.0
           ? spec.success_threshold
           : 2.0 * spec.ansac.residual.inlier_threshold},
  };
  for (const auto& s : result.summaries) {
    nlohmann::json e;
    e["median_iterations"] = s.median_iterations;
    e["median_wall_ms"] = s.median_wall_ms;
    e["success_rate"] = s.success_rate;
    std::vector<int> grid(s.curve.size());
    for (std::size_t i = 0; i < s.curve.size(); ++i) {
      grid[i] = static_cast<int>(i) + 1;
    }
    e["convergence"] = {{"iteration", grid}, {"mean_epsilon", s.curve}};
    j["estimators"][s.name] = std::move(e);
  }
  return j.dump(2) + "\n";
}

}  // namespace ansac
