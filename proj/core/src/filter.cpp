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

#include "ansac/filter.hpp"

#include <algorithm>

namespace ansac {

FilterState filter_init(double prior, const FilterParams& params) {
  return {std::clamp(prior, 0.0, 1.0), params.sigma_p * params.sigma_p};
}

void filter_reseed(FilterState& state, double epsilon) {
  state.epsilon = std::clamp(epsilon, 0.0, 1.0);
}

FilterState filter_predict(const FilterState& state, double prior,
                           bool subset_switched, const FilterParams& params) {
  const double a = subset_switched ? params.alpha : 1.0;
  const double b = 1.0 - a;
  FilterState out;
  out.epsilon = a * state.epsilon + b * prior;
  out.variance = a * a * state.variance + params.sigma_p * params.sigma_p;
  return out;
}

FilterState filter_update(const FilterState& predicted, double observed,
                          const FilterParams& params) {
  const double su2 = params.sigma_u * params.sigma_u;
  const double gain = predicted.variance / (predicted.variance + su2);
  FilterState out;
  out.epsilon = std::clamp(
      predicted.epsilon + gain * (observed - predicted.epsilon), 0.0, 1.0);
  out.variance = (1.0 - gain) * predicted.variance;
  return out;
}

}  // namespace ansac
