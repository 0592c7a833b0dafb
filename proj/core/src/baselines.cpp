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

#include "ansac/baselines.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "ansac/errors.hpp"
#include "ansac/sampler.hpp"

namespace ansac {
namespace {

constexpr int kUnbounded = std::numeric_limits<int>::max();

void require_enough(std::size_t n, int m) {
  if (n < static_cast<std::size_t>(m)) {
    throw NotEnoughCorrespondences("need at least " + std::to_string(m) +
                                   " correspondences, got " +
                                   std::to_string(n));
  }
}

}  // namespace

EstimationReport ransac_estimate(std::span<const Correspondence> corrs,
                                 ModelKind kind, const BaselineConfig& cfg) {
  if (!cfg.valid()) throw std::invalid_argument("invalid BaselineConfig");
  const int m = min_sample_size(kind);
  const std::size_t n = corrs.size();
  require_enough(n, m);

  const auto t0 = std::chrono::steady_clock::now();
  std::mt19937_64 rng(cfg.seed);

  EstimationReport report;
  double eps_best = 0.0;
  bool have_model = false;
  int adaptive_limit = kUnbounded;
  int iterations = 0;

  std::vector<int> sample_idx;
  std::vector<Correspondence> sample;

  while (iterations < cfg.max_iterations && iterations < adaptive_limit) {
    ++iterations;
    draw_sample(rng, static_cast<int>(n), m, sample_idx);
    sample.clear();
    int max_idx = -1;
    for (int idx : sample_idx) {
      sample.push_back(corrs[static_cast<std::size_t>(idx)]);
      max_idx = std::max(max_idx, idx);
    }
    if (auto model = solve_model(kind, sample)) {
      auto [cnt, mask] = count_inliers(*model, corrs, cfg.residual);
      const double eps_h = static_cast<double>(cnt) / static_cast<double>(n);
      if (eps_h > eps_best) {
        eps_best = eps_h;
        report.best_model = *model;
        report.inlier_mask = std::move(mask);
        have_model = true;
        adaptive_limit =
            update_max_iterations(eps_best, m, cfg.nu, cfg.max_iterations);
      }
    }
    report.epsilon_history.push_back(eps_best);
    report.trace.push_back({1, m, max_idx, 1, eps_best});
  }

  if (!have_model) {
    throw NoModelFound("all " + std::to_string(iterations) +
                       " iterations produced degenerate samples");
  }
  report.best_inlier_ratio = eps_best;
  report.iterations_executed = iterations;
  report.termination = adaptive_limit <= cfg.max_iterations
                           ? Termination::MaxIterationsL
                           : Termination::GlobalCeiling;
  report.wall_time =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  return report;
}

EstimationReport prosac_estimate(std::span<const Correspondence> corrs,
                                 ModelKind kind, QualityKind quality,
                                 const BaselineConfig& cfg) {
  if (!cfg.valid()) throw std::invalid_argument("invalid BaselineConfig");
  const int m = min_sample_size(kind);
  const std::size_t n = corrs.size();
  require_enough(n, m);

  const auto t0 = std::chrono::steady_clock::now();
  const RankedProblem ranked = build_ranked_problem(corrs, quality, m);
  const std::span<const Correspondence> all(ranked.ordered);
  std::mt19937_64 rng(cfg.seed);

  // Growth schedule: T_n is the expected number of draws containing only
  // points from the top n among prosac_growth_samples fully random minimal
  // draws; T'_n is its integer ceiling schedule.
  const int N = static_cast<int>(n);
  double t_n = cfg.prosac_growth_samples;
  for (int i = 0; i < m; ++i) {
    t_n *= static_cast<double>(m - i) / static_cast<double>(N - i);
  }
  double t_prime = 1.0;  // T'_pool for the current pool size
  int pool = m;          // current prefix length

  EstimationReport report;
  double eps_best = 0.0;
  bool have_model = false;
  int adaptive_limit = kUnbounded;
  int iterations = 0;

  std::vector<int> sample_idx;
  std::vector<Correspondence> sample;

  while (iterations < cfg.max_iterations && iterations < adaptive_limit) {
    ++iterations;

    if (static_cast<double>(iterations) > t_prime && pool < N) {
      const double t_next =
          t_n * static_cast<double>(pool + 1) / static_cast<double>(pool + 1 - m);
      t_prime += std::ceil(t_next - t_n);
      t_n = t_next;
      ++pool;
    }

    sample.clear();
    int max_idx = -1;
    if (pool >= N && static_cast<double>(iterations) > t_prime) {
      // Growth exhausted: plain uniform minimal samples over everything.
      draw_sample(rng, N, m, sample_idx);
    } else {
      // Semi-random draw: the newest point plus m-1 from the prefix
      // before it.
      draw_sample(rng, pool - 1, m - 1, sample_idx);
      sample_idx.push_back(pool - 1);
    }
    for (int idx : sample_idx) {
      sample.push_back(ranked.ordered[static_cast<std::size_t>(idx)]);
      max_idx = std::max(max_idx, idx);
    }

    if (auto model = solve_model(kind, sample)) {
      auto [cnt, mask] = count_inliers(*model, all, cfg.residual);
      const double eps_h = static_cast<double>(cnt) / static_cast<double>(n);
      if (eps_h > eps_best) {
        eps_best = eps_h;
        report.best_model = *model;
        have_model = true;
        report.inlier_mask.assign(n, false);
        for (std::size_t j = 0; j < n; ++j) {
          report.inlier_mask[ranked.source_index[j]] = mask[j];
        }
        adaptive_limit =
            update_max_iterations(eps_best, m, cfg.nu, cfg.max_iterations);
      }
    }
    report.epsilon_history.push_back(eps_best);
    report.trace.push_back({pool - m + 1, m, max_idx, pool - m + 1, eps_best});
  }

  if (!have_model) {
    throw NoModelFound("all " + std::to_string(iterations) +
                       " iterations produced degenerate samples");
  }
  report.best_inlier_ratio = eps_best;
  report.iterations_executed = iterations;
  report.termination = adaptive_limit <= cfg.max_iterations
                           ? Termination::MaxIterationsL
                           : Termination::GlobalCeiling;
  report.wall_time =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  return report;
}

}  // namespace ansac
