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

#include "ansac/estimator.hpp"
#include "ansac/geometry.hpp"
#include "ansac/ranking.hpp"
#include "ansac/types.hpp"

namespace ansac {

/// Shared configuration for the reference estimators.
struct BaselineConfig {
  ResidualConfig residual;
  double nu = 0.99;
  int max_iterations = 100000;
  std::uint64_t seed = 0;
  /// PROSAC growth-rate parameter: the number of fully random samples the
  /// growth schedule is equivalent to.
  double prosac_growth_samples = 200000.0;

  bool valid() const {
    return residual.inlier_threshold > 0.0 && nu > 0.0 && nu < 1.0 &&
           max_iterations >= 1 && prosac_growth_samples >= 1.0;
  }
};

/// Classic hypothesize-and-verify with uniform minimal samples over the
/// whole set and the adaptive iteration bound recomputed from the best
/// model's support. Same report schema as the adaptive estimator (the
/// trace records subset 1 = the full set).
EstimationReport ransac_estimate(std::span<const Correspondence> corrs,
                                 ModelKind kind, const BaselineConfig& cfg);

/// Progressive sample consensus: minimal samples drawn from a prefix of
/// the quality-ranked correspondences that grows with the standard PROSAC
/// schedule; while growing, each sample contains the newest point plus
/// m-1 random points from the rest of the prefix.
EstimationReport prosac_estimate(std::span<const Correspondence> corrs,
                                 ModelKind kind, QualityKind quality,
                                 const BaselineConfig& cfg);

}  // namespace ansac
