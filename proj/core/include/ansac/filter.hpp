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

namespace ansac {

/// Scalar Kalman filter parameters for the per-subset inlier-ratio track.
/// `alpha` is the prior-mixing base applied on subset switches; sigma_p and
/// sigma_u are the process and update diffusion standard deviations.
struct FilterParams {
  double alpha = 0.5;
  double sigma_p = 0.1;
  double sigma_u = 0.1;

  bool valid() const {
    return alpha >= 0.0 && alpha <= 1.0 && sigma_p > 0.0 && sigma_u > 0.0;
  }
};

/// Mean and variance of the current subset's inlier ratio.
struct FilterState {
  double epsilon = 0.0;
  double variance = 0.0;
};

/// Starts a track at the subset prior. The initial variance is sigma_p^2
/// (the process-noise scale; the least-informative consistent choice).
FilterState filter_init(double prior, const FilterParams& params);

/// Overwrites the mean, keeping the variance. Used when the caller wants to
/// seed the track explicitly instead of relying on state continuity across
/// a subset switch.
void filter_reseed(FilterState& state, double epsilon);

/// Prediction step. With subset_switched the mean mixes the carried
/// estimate with the new subset's prior (weights alpha / 1-alpha);
/// otherwise the prior is ignored (weight 1 on the carried estimate).
/// Variance always diffuses by sigma_p^2.
FilterState filter_predict(const FilterState& state, double prior,
                           bool subset_switched, const FilterParams& params);

/// Update step: standard scalar Kalman gain against the observed inlier
/// ratio. The posterior mean is clamped to [0,1].
FilterState filter_update(const FilterState& predicted, double observed,
                          const FilterParams& params);

}  // namespace ansac
