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

#include "ansac/estimator.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "ansac/errors.hpp"

namespace ansac {

std::string_view to_string(Termination t) {
  switch (t) {
    case Termination::EarlyStop:
      return "early_stop";
    case Termination::MaxIterationsL:
      return "max_iterations";
    case Termination::GlobalCeiling:
      return "global_ceiling";
    case Termination::Exhausted:
      return "exhausted";
  }
  return "unknown";
}

int update_max_iterations(double eps, int m, double nu, int cap) {
  const double p = std::pow(std::clamp(eps, 0.0, 1.0), m);
  return ransac_trial_count(p, nu, cap);
}

bool check_termination(std::span<const double> history, int current_max_iters,
                       double tau, double gamma) {
  if (history.empty()) return false;
  if (!(history.back() > 0.0)) return false;  // nothing accepted yet
  const long window =
      std::max(1L, std::lround(tau * static_cast<double>(current_max_iters)));
  const auto count = static_cast<long>(history.size());
  if (count <= window) return false;
  // The increments telescope: mean of the last T first-differences.
  const double mean_delta =
      (history[static_cast<std::size_t>(count - 1)] -
       history[static_cast<std::size_t>(count - 1 - window)]) /
      static_cast<double>(window);
  return mean_delta < gamma;
}

namespace {

SamplerParams resolve_sampler(SamplerParams sp, int m) {
  if (sp.q_min <= 0) sp.q_min = m;
  if (sp.q_max <= 0) sp.q_max = 4 * sp.q_min;
  sp.q_max = std::max(sp.q_max, sp.q_min);
  return sp;
}

int count_prefix(const std::vector<bool>& mask, std::size_t prefix) {
  int c = 0;
  for (std::size_t j = 0; j < prefix; ++j) c += mask[j] ? 1 : 0;
  return c;
}

}  // namespace

EstimationReport ansac_estimate_ranked(const RankedProblem& ranked,
                                       ModelKind kind,
                                       const AnsacConfig& cfg) {
  if (!cfg.valid()) throw std::invalid_argument("invalid AnsacConfig");
  const int m = ranked.m;
  const auto n = ranked.size();
  if (m != min_sample_size(kind)) {
    throw std::invalid_argument("ranked problem built for a different model");
  }
  if (n < static_cast<std::size_t>(m) || ranked.priors.empty()) {
    throw NotEnoughCorrespondences(
        "need at least " + std::to_string(m) + " correspondences, got " +
        std::to_string(n));
  }

  const auto t0 = std::chrono::steady_clock::now();
  const SamplerParams sp = resolve_sampler(cfg.sampler, m);
  const int subset_count = static_cast<int>(ranked.subset_count());
  const std::span<const Correspondence> all(ranked.ordered);

  std::mt19937_64 rng(cfg.seed);

  int s = 1;  // current subset, 1-based
  FilterState state = filter_init(ranked.priors[0], cfg.filter);
  double eps_subset = state.epsilon;   // filtered subset inlier ratio
  double eps_observed = eps_subset;    // support of the best model on S_s
  double eps_best = 0.0;               // overall inlier ratio of the best model
  bool have_model = false;
  Model best;
  std::vector<bool> best_mask;

  constexpr int kUnbounded = std::numeric_limits<int>::max();
  int adaptive_limit = kUnbounded;  // L; recomputed on every improvement
  int draws_in_subset = 0;

  EstimationReport report;
  report.epsilon_history.reserve(64);
  report.trace.reserve(64);

  std::vector<int> sample_idx;
  std::vector<Correspondence> sample;
  int iterations = 0;
  Termination why = Termination::GlobalCeiling;
  bool stopped_in_loop = false;

  while (iterations < cfg.max_iterations && iterations < adaptive_limit) {
    ++iterations;
    const int subset_size = m + s - 1;

    const int q = sample_size(eps_subset, subset_size, sp);
    draw_sample(rng, subset_size, q, sample_idx);
    ++draws_in_subset;

    sample.clear();
    int max_idx = -1;
    for (int idx : sample_idx) {
      sample.push_back(ranked.ordered[static_cast<std::size_t>(idx)]);
      max_idx = std::max(max_idx, idx);
    }

    // Degenerate samples consume the iteration and the subset draw but are
    // not tested.
    if (auto model = solve_model(kind, sample)) {
      auto [cnt, mask] = count_inliers(*model, all, cfg.residual);
      const double eps_h = static_cast<double>(cnt) / static_cast<double>(n);
      if (eps_h > eps_best) {
        const int cnt_subset =
            count_prefix(mask, static_cast<std::size_t>(subset_size));
        eps_observed =
            static_cast<double>(cnt_subset) / static_cast<double>(subset_size);
        eps_best = eps_h;
        best = *model;
        best_mask = std::move(mask);
        have_model = true;
        adaptive_limit =
            update_max_iterations(eps_best, m, sp.nu, cfg.max_iterations);
      }
    }

    // Subset progression: move on once the current subset spent its
    // hypothesis budget.
    const int budget = hypothesis_budget(eps_observed, sp);
    bool switched = false;
    if (draws_in_subset >= budget && s < subset_count) {
      ++s;
      draws_in_subset = 0;
      switched = true;
    }

    // Kalman refinement of the (possibly advanced) subset's inlier ratio.
    const FilterState predicted = filter_predict(
        state, ranked.priors[static_cast<std::size_t>(s - 1)], switched,
        cfg.filter);
    state = filter_update(predicted, eps_observed, cfg.filter);
    eps_subset = state.epsilon;

    report.epsilon_history.push_back(eps_best);
    report.trace.push_back(
        {s - (switched ? 1 : 0), q, max_idx, s, eps_subset});

    if (cfg.early_termination &&
        check_termination(report.epsilon_history,
                          std::min(adaptive_limit, cfg.max_iterations),
                          cfg.tau, cfg.gamma)) {
      why = Termination::EarlyStop;
      stopped_in_loop = true;
      break;
    }
    // With n == m the only possible sample is the full set; once it has
    // produced a model there is nothing new to draw.
    if (have_model && n == static_cast<std::size_t>(m)) {
      why = Termination::Exhausted;
      stopped_in_loop = true;
      break;
    }
  }

  if (!have_model) {
    throw NoModelFound("all " + std::to_string(iterations) +
                       " iterations produced degenerate samples");
  }
  if (!stopped_in_loop) {
    why = adaptive_limit <= cfg.max_iterations ? Termination::MaxIterationsL
                                               : Termination::GlobalCeiling;
  }

  report.best_model = best;
  report.best_inlier_ratio = eps_best;
  report.iterations_executed = iterations;
  report.termination = why;
  // Map the mask from ranked order back to the caller's order.
  report.inlier_mask.assign(n, false);
  for (std::size_t j = 0; j < n; ++j) {
    report.inlier_mask[ranked.source_index[j]] = best_mask[j];
  }
  report.wall_time =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  return report;
}

EstimationReport ansac_estimate(std::span<const Correspondence> corrs,
                                ModelKind kind, QualityKind quality,
                                const AnsacConfig& cfg) {
  const int m = min_sample_size(kind);
  if (corrs.size() < static_cast<std::size_t>(m)) {
    throw NotEnoughCorrespondences(
        "need at least " + std::to_string(m) + " correspondences, got " +
        std::to_string(corrs.size()));
  }
  return ansac_estimate_ranked(build_ranked_problem(corrs, quality, m), kind,
                               cfg);
}

}  // namespace ansac
