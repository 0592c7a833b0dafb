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

#include <cstddef>
#include <span>
#include <vector>

#include "ansac/types.hpp"

namespace ansac {

/// Interpretation of Correspondence::quality.
///  - LoweRatio:     nearest/second-nearest descriptor distance ratio,
///                   lower is better, raw value >= 0.
///  - LoweRadius:    r with r^2 = r1^2 + r2^2 over both match directions,
///                   lower is better, raw value >= 0.
///  - Precomputed01: already a correctness estimate in [0,1], higher is
///                   better; passed through unchanged.
enum class QualityKind { LoweRatio, LoweRadius, Precomputed01 };

/// Width of the Gaussian kernel that maps a Lowe score to [0,1]:
/// 0.8 for ratios, 1.0 for radii. `override_width > 0` replaces the default.
double quality_kernel_width(QualityKind kind, double override_width = 0.0);

/// Maps a raw quality score to an estimated correctness in [0,1].
/// Lowe kinds use exp(-(q/sigma)^2), so the mapping is monotone decreasing
/// in the raw score; Precomputed01 is the identity (clamped).
/// Throws InvalidQuality for negative Lowe scores or non-finite input.
double correctness(const Correspondence& c, QualityKind kind,
                   double kernel_width = 0.0);

/// Correspondences sorted by descending estimated correctness, plus the
/// inlier-ratio prior of every ranked subset. Subset i (1-based) is the
/// prefix of `ordered` of length m+i-1; nothing is materialized.
struct RankedProblem {
  std::vector<Correspondence> ordered;
  /// ordered[j] came from the input at position source_index[j].
  std::vector<std::size_t> source_index;
  /// priors[i-1] is the mean mapped correctness over the first m+i-1
  /// entries, i = 1 .. n-m+1.
  std::vector<double> priors;
  int m = 0;

  std::size_t size() const { return ordered.size(); }
  std::size_t subset_count() const { return priors.size(); }
  /// Number of correspondences in subset i (1-based).
  std::size_t subset_size(std::size_t i) const {
    return static_cast<std::size_t>(m) + i - 1;
  }
};

/// Sorts by descending correctness (stable: ties keep input order) and
/// computes the per-subset priors as cumulative means of the mapped
/// correctness values. Throws NotEnoughCorrespondences when n < m.
RankedProblem build_ranked_problem(std::span<const Correspondence> corrs,
                                   QualityKind kind, int m,
                                   double kernel_width = 0.0);

}  // namespace ansac
