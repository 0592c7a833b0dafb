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

#include "ansac/ranking.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "ansac/errors.hpp"

namespace ansac {

double quality_kernel_width(QualityKind kind, double override_width) {
  if (override_width > 0.0) return override_width;
  switch (kind) {
    case QualityKind::LoweRatio:
      return 0.8;
    case QualityKind::LoweRadius:
      return 1.0;
    case QualityKind::Precomputed01:
      return 1.0;  // unused
  }
  return 1.0;
}

double correctness(const Correspondence& c, QualityKind kind,
                   double kernel_width) {
  const double q = c.quality;
  if (!std::isfinite(q)) throw InvalidQuality("quality score is not finite");
  if (kind == QualityKind::Precomputed01) {
    return std::clamp(q, 0.0, 1.0);
  }
  if (q < 0.0) {
    throw InvalidQuality("Lowe quality scores must be non-negative");
  }
  const double sigma = quality_kernel_width(kind, kernel_width);
  const double t = q / sigma;
  return std::exp(-t * t);
}

RankedProblem build_ranked_problem(std::span<const Correspondence> corrs,
                                   QualityKind kind, int m,
                                   double kernel_width) {
  if (m < 1) throw std::invalid_argument("minimal sample size must be >= 1");
  const std::size_t n = corrs.size();
  if (n < static_cast<std::size_t>(m)) {
    throw NotEnoughCorrespondences("need at least " + std::to_string(m) +
                                   " correspondences, got " +
                                   std::to_string(n));
  }

  std::vector<double> scores(n);
  for (std::size_t j = 0; j < n; ++j) {
    scores[j] = correctness(corrs[j], kind, kernel_width);
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return scores[a] > scores[b];
  });

  RankedProblem out;
  out.m = m;
  out.ordered.reserve(n);
  out.source_index = order;
  for (std::size_t j : order) out.ordered.push_back(corrs[j]);

  // priors[i] = mean mapped correctness over the prefix of length m+i.
  out.priors.reserve(n - static_cast<std::size_t>(m) + 1);
  double running = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    running += scores[order[j]];
    if (j + 1 >= static_cast<std::size_t>(m)) {
      out.priors.push_back(running / static_cast<double>(j + 1));
    }
  }
  return out;
}

}  // namespace ansac
