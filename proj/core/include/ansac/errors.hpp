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

#include <stdexcept>
#include <string>

namespace ansac {

/// Base class for all errors raised by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Fewer correspondences than the minimal sample size of the model.
struct NotEnoughCorrespondences : Error {
  using Error::Error;
};

/// A raw quality score that is invalid for the declared quality kind
/// (e.g. a negative Lowe ratio).
struct InvalidQuality : Error {
  using Error::Error;
};

/// Malformed correspondence file. Carries the 1-based line number.
struct ParseError : Error {
  ParseError(const std::string& msg, int line_number)
      : Error(msg), line(line_number) {}
  int line = 0;
};

/// The synthetic generator exhausted its rejection-sampling budget.
struct GenerationFailed : Error {
  using Error::Error;
};

/// Every iteration of an estimation run produced a degenerate sample.
struct NoModelFound : Error {
  using Error::Error;
};

}  // namespace ansac
