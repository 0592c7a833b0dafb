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

#include <Eigen/Core>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "ansac/types.hpp"

namespace ansac {

enum class ModelKind { Homography, Fundamental };

/// Minimal number of correspondences that determines a model of this kind
/// (4-point DLT for homographies, normalized 8-point for fundamentals).
constexpr int min_sample_size(ModelKind kind) {
  return kind == ModelKind::Homography ? 4 : 8;
}

/// A 3x3 model hypothesis. The matrix is Frobenius-normalized to 1 with a
/// canonical sign (largest-magnitude entry positive), which fixes the
/// projective scale ambiguity. Fundamental matrices are rank-2 enforced.
struct Model {
  ModelKind kind = ModelKind::Homography;
  Eigen::Matrix3d matrix = Eigen::Matrix3d::Identity();
};

/// Inlier test parameters. The threshold is in pixels and applies to the
/// symmetric transfer distance for homographies and the Sampson distance
/// for fundamental matrices.
struct ResidualConfig {
  double inlier_threshold = 2.0;
};

/// Fits a homography to >= 4 correspondences with the DLT on
/// Hartley-normalized coordinates. Over-determined samples are solved in
/// the algebraic least-squares sense. Returns nullopt for degenerate
/// samples (design matrix rank below 8, e.g. three collinear points).
std::optional<Model> solve_homography(std::span<const Correspondence> sample);

/// Fits a fundamental matrix to >= 8 correspondences with the normalized
/// 8-point algorithm; rank 2 is enforced by zeroing the smallest singular
/// value. Returns nullopt for degenerate samples.
std::optional<Model> solve_fundamental(std::span<const Correspondence> sample);

/// Dispatches on kind.
std::optional<Model> solve_model(ModelKind kind,
                                 std::span<const Correspondence> sample);

/// Distance of a correspondence to a model, in pixels.
/// Homography: symmetric transfer distance 0.5*(|x' - Hx| + |x - inv(H)x'|).
/// Fundamental: Sampson distance.
/// Degenerate evaluations (singular H, point mapped to infinity) yield +inf
/// instead of an error, so hypothesis testing stays total.
double residual(const Model& model, const Correspondence& c);

/// Applies the inlier test residual(model, set[j]) < cfg.inlier_threshold
/// to every correspondence. Returns the inlier count and the boolean mask.
std::pair<int, std::vector<bool>> count_inliers(
    const Model& model, std::span<const Correspondence> set,
    const ResidualConfig& cfg);

}  // namespace ansac
