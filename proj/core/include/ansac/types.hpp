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

#include <cmath>

namespace ansac {

/// A 2D image point in pixel coordinates.
struct Point2 {
  double x = 0.0;
  double y = 0.0;

  bool finite() const { return std::isfinite(x) && std::isfinite(y); }
};

/// A candidate match between two images: a point in each image plus a raw
/// matcher quality score. The score's semantics depend on the QualityKind
/// chosen when ranking (see ranking.hpp).
struct Correspondence {
  Point2 p1;
  Point2 p2;
  double quality = 0.0;
};

}  // namespace ansac
