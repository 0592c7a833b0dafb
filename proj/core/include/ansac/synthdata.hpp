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
#include <vector>

#include "ansac/geometry.hpp"
#include "ansac/types.hpp"

namespace ansac {

/// Recipe for a synthetic correspondence problem with planted ground truth.
struct SynthSpec {
  ModelKind kind = ModelKind::Homography;
  int n = 100;
  double inlier_ratio = 0.5;  // planted fraction, (0, 1]
  double noise_sigma = 0.0;   // pixels, on inlier endpoints
  double image_width = 640.0;
  double image_height = 480.0;
  /// Correlation between quality rank and true inlierness: 1 = quality
  /// separates inliers from outliers perfectly, 0 = quality carries no
  /// information.
  double quality_fidelity = 1.0;
  std::uint64_t seed = 0;

  bool valid() const {
    return n >= min_sample_size(kind) && inlier_ratio > 0.0 &&
           inlier_ratio <= 1.0 && noise_sigma >= 0.0 && image_width > 0.0 &&
           image_height > 0.0 && quality_fidelity >= 0.0 &&
           quality_fidelity <= 1.0;
  }
};

/// A generated problem. Quality scores are Precomputed01. `clean` holds the
/// same correspondences before noise was applied (outlier entries are
/// unchanged); it backs ground-truth deviation metrics.
struct SynthProblem {
  std::vector<Correspondence> corrs;
  Model truth_model;
  std::vector<bool> truth_mask;
  std::vector<Correspondence> clean;
};

/// Generates a problem with exactly round(n * inlier_ratio) planted inliers.
/// Inlier noise is renewed until the truth-model residual stays within
/// 3 * noise_sigma; outliers are uniform in the image and kept only when
/// their truth-model residual exceeds 3 px. Deterministic in the seed.
/// Throws GenerationFailed when rejection sampling exceeds its attempt
/// budget (degenerate camera or homography draw).
SynthProblem generate(const SynthSpec& spec);

}  // namespace ansac
