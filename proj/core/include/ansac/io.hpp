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

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "ansac/types.hpp"

namespace ansac {

/// Reads the correspondence CSV format: one `x1,y1,x2,y2,quality` row per
/// correspondence, optional header (detected by a non-numeric first field),
/// LF or CRLF endings, blank lines ignored. Throws ParseError with the
/// 1-based line number on malformed rows and Error when the file cannot be
/// opened.
std::vector<Correspondence> parse_correspondences(const std::string& path);
std::vector<Correspondence> parse_correspondences(std::istream& in);

/// Writes the same format with a header row. Numbers are emitted with
/// shortest round-trip formatting, so parse(write(x)) == x exactly.
void write_correspondences(std::ostream& out,
                           std::span<const Correspondence> corrs);
void write_correspondences(const std::string& path,
                           std::span<const Correspondence> corrs);

/// Shortest round-trip decimal formatting used across all file output.
std::string format_double(double value);

}  // namespace ansac
