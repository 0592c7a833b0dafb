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

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "ansac/filter.hpp"
#include "ansac/geometry.hpp"
#include "ansac/ranking.hpp"
#include "ansac/sampler.hpp"
#include "ansac/types.hpp"

namespace ansac {

struct AnsacConfig {
  FilterParams filter;
  SamplerParams sampler;
  ResidualConfig residual;
  double tau = 0.01;     // termination window as a fraction of L
  double gamma = 0.001;  // mean-increment threshold for early stop
  int max_iterations = 100000;
  std::uint64_t seed = 0;
  /// Early termination can be switched off to study raw convergence.
  bool early_termination = true;

  bool valid() const {
    return filter.valid() && sampler.valid() &&
           residual.inlier_threshold > 0.0 && tau > 0.0 && tau < 1.0 &&
           gamma > 0.0 && max_iterations >= 1;
  }
};

enum class Termination { EarlyStop, MaxIterationsL, GlobalCeiling, Exhausted };

std::string_view to_string(Termination t);

/// Per-iteration diagnostics. `sample_subset` is the 1-based subset the
/// sample was drawn from; `filter_subset` the (possibly advanced) subset the
/// filtered estimate refers to after the refinement step of that iteration.
struct IterationTrace {
  int sample_subset = 0;
  int sample_size = 0;
  int max_sample_index = -1;
  int filter_subset = 0;
  double filter_epsilon = 0.0;
};

struct EstimationReport {
  Model best_model;
  /// Fraction of all correspondences supporting the best model.
  double best_inlier_ratio = 0.0;
  /// Inlier mask in the order of the input correspondences.
  std::vector<bool> inlier_mask;
  int iterations_executed = 0;
  /// Best-so-far overall inlier ratio per iteration (non-decreasing).
  std::vector<double> epsilon_history;
  Termination termination = Termination::GlobalCeiling;
  double wall_time = 0.0;  // seconds
  /// Per-iteration diagnostics (subset progression, filter track).
  std::vector<IterationTrace> trace;
};

/// Maximum-iteration bound from the overall inlier ratio: the trial count
/// for p = eps^m, capped. Grows without bound as eps -> 0 (returns cap).
int update_max_iterations(double eps, int m, double nu, int cap);

/// Early-termination test over the overall inlier-ratio history. The window
/// is T = max(1, round(tau * L)); returns true when more than T entries
/// exist, at least one hypothesis has been accepted, and the mean of the
/// last T increments is below gamma.
bool check_termination(std::span<const double> history, int current_max_iters,
                       double tau, double gamma);

/// Runs the adaptive non-minimal estimation loop on a pre-ranked problem.
/// Custom priors in `ranked` are honored, which makes the filter's behavior
/// testable under deliberately corrupted priors.
EstimationReport ansac_estimate_ranked(const RankedProblem& ranked,
                                       ModelKind kind,
                                       const AnsacConfig& cfg);

/// Convenience entry point: ranks `corrs` by quality, computes the subset
/// priors, and runs the loop. Throws NotEnoughCorrespondences when
/// n < min_sample_size(kind), NoModelFound when every iteration drew a
/// degenerate sample.
EstimationReport ansac_estimate(std::span<const Correspondence> corrs,
                                ModelKind kind, QualityKind quality,
                                const AnsacConfig& cfg);

}  // namespace ansac
