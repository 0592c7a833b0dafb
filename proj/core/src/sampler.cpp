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

#include "ansac/sampler.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace ansac {

double logistic_confidence(double eps, const SamplerParams& params) {
  return 1.0 / (1.0 + std::exp(-params.omega * (eps - params.mu)));
}

int sample_size(double eps, int subset_size, const SamplerParams& params) {
  const double lam = logistic_confidence(eps, params);
  const double q =
      (1.0 - lam) * params.q_min + lam * static_cast<double>(params.q_max);
  const int rounded = static_cast<int>(std::lround(q));
  const int hi = std::min(params.q_max, subset_size);
  return std::clamp(rounded, params.q_min, std::max(params.q_min, hi));
}

int ransac_trial_count(double p, double nu, int cap) {
  if (p >= 1.0) return 1;
  if (!(p > 0.0)) return cap;
  // log1p keeps small p accurate; log(1-p) underflows to -0 for p ~ 1e-17.
  const double denom = std::log1p(-p);
  if (!(denom < 0.0)) return cap;
  const double trials = std::log1p(-nu) / denom;
  if (!std::isfinite(trials) || trials >= static_cast<double>(cap)) return cap;
  return std::max(1, static_cast<int>(std::ceil(trials)));
}

int hypothesis_budget(double eps_observed, const SamplerParams& params) {
  const double p = std::pow(std::clamp(eps_observed, 0.0, 1.0), params.q_min);
  return ransac_trial_count(p, params.nu, params.budget_cap);
}

void draw_sample(std::mt19937_64& rng, int subset_size, int q,
                 std::vector<int>& out) {
  // Partial Fisher-Yates over a scratch index array.
  static thread_local std::vector<int> pool;
  pool.resize(static_cast<std::size_t>(subset_size));
  std::iota(pool.begin(), pool.end(), 0);
  out.clear();
  out.reserve(static_cast<std::size_t>(q));
  for (int i = 0; i < q; ++i) {
    std::uniform_int_distribution<int> pick(i, subset_size - 1);
    const int j = pick(rng);
    std::swap(pool[static_cast<std::size_t>(i)],
              pool[static_cast<std::size_t>(j)]);
    out.push_back(pool[static_cast<std::size_t>(i)]);
  }
}

std::vector<int> draw_sample(std::mt19937_64& rng, int subset_size, int q) {
  std::vector<int> out;
  draw_sample(rng, subset_size, q, out);
  return out;
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace ansac
