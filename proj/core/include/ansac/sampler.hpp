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
#include <random>
#include <vector>

namespace ansac {

/// Adaptive sample-size and hypothesis-budget parameters.
/// q_min/q_max of 0 mean "derive from the model": q_min = m and
/// q_max = 4*m (resolved by the estimator before the loop).
struct SamplerParams {
  double omega = 20.0;  // logistic steepness
  double mu = 0.75;     // logistic inflection point
  int q_min = 0;
  int q_max = 0;
  double nu = 0.99;          // confidence that one hypothesis is good
  int budget_cap = 1000000;  // cap for the Eq.-style trial count

  bool valid() const {
    return omega > 0.0 && mu > 0.0 && mu < 1.0 && nu > 0.0 && nu < 1.0 &&
           budget_cap >= 1 && q_min >= 0 && (q_max == 0 || q_max >= q_min);
  }
};

/// Logistic confidence that a sample from a subset with inlier ratio `eps`
/// is outlier-free: 1 / (1 + exp(-omega * (eps - mu))). Strictly increasing
/// in eps.
double logistic_confidence(double eps, const SamplerParams& params);

/// Adaptive sample size: interpolates between q_min and q_max with the
/// logistic confidence, rounds to nearest, and clamps to
/// [q_min, min(q_max, subset_size)].
int sample_size(double eps, int subset_size, const SamplerParams& params);

/// Number of trials that guarantees one all-inlier draw with confidence nu
/// when a single draw succeeds with probability p: ceil(log(1-nu)/log(1-p)),
/// capped. p <= 0 (or underflow) yields the cap; p >= 1 yields 1.
int ransac_trial_count(double p, double nu, int cap);

/// Maximum number of hypotheses to draw from the current subset. Uses the
/// worst case of minimal sample size: p = eps_observed^q_min.
int hypothesis_budget(double eps_observed, const SamplerParams& params);

/// Draws q distinct indices in [0, subset_size) uniformly without
/// replacement. Deterministic for a given generator state.
std::vector<int> draw_sample(std::mt19937_64& rng, int subset_size, int q);

/// In-place variant reusing the caller's buffer (the hot loop's path).
void draw_sample(std::mt19937_64& rng, int subset_size, int q,
                 std::vector<int>& out);

/// SplitMix64 step; used to derive independent per-trial seeds.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream);

}  // namespace ansac
