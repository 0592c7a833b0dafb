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

#include "ansac/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <system_error>

#include "ansac/errors.hpp"

namespace ansac {
namespace {

bool parse_field(std::string_view field, double& out) {
  // Trim surrounding spaces; from_chars is locale-independent.
  while (!field.empty() && (field.front() == ' ' || field.front() == '\t')) {
    field.remove_prefix(1);
  }
  while (!field.empty() && (field.back() == ' ' || field.back() == '\t')) {
    field.remove_suffix(1);
  }
  if (field.empty()) return false;
  const auto [ptr, ec] =
      std::from_chars(field.data(), field.data() + field.size(), out);
  return ec == std::errc{} && ptr == field.data() + field.size();
}

std::vector<std::string_view> split_fields(std::string_view line,
                                           std::vector<std::string_view>& out) {
  out.clear();
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = line.find(',', start);
    if (comma == std::string_view::npos) {
      out.push_back(line.substr(start));
      break;
    }
    out.push_back(line.substr(start, comma - start));
    start = comma + 1;
  }
  return out;
}

}  // namespace

std::vector<Correspondence> parse_correspondences(std::istream& in) {
  std::vector<Correspondence> corrs;
  std::vector<std::string_view> fields;
  std::string line;
  int line_number = 0;
  bool saw_data_or_header = false;

  while (std::getline(in, line)) {
    ++line_number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;

    split_fields(line, fields);
    double first = 0.0;
    if (!saw_data_or_header && !parse_field(fields[0], first)) {
      saw_data_or_header = true;  // header row
      continue;
    }
    saw_data_or_header = true;

    if (fields.size() != 5) {
      throw ParseError("line " + std::to_string(line_number) + ": expected 5 "
                       "fields (x1,y1,x2,y2,quality), got " +
                       std::to_string(fields.size()),
                       line_number);
    }
    double v[5];
    for (int i = 0; i < 5; ++i) {
      if (!parse_field(fields[static_cast<std::size_t>(i)], v[i])) {
        throw ParseError("line " + std::to_string(line_number) +
                         ": field " + std::to_string(i + 1) +
                         " is not a number",
                         line_number);
      }
    }
    corrs.push_back({{v[0], v[1]}, {v[2], v[3]}, v[4]});
  }
  return corrs;
}

std::vector<Correspondence> parse_correspondences(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open correspondence file: " + path);
  return parse_correspondences(in);
}

std::string format_double(double value) {
  char buf[32];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, ptr);
}

void write_correspondences(std::ostream& out,
                           std::span<const Correspondence> corrs) {
  out << "x1,y1,x2,y2,quality\n";
  for (const auto& c : corrs) {
    out << format_double(c.p1.x) << ',' << format_double(c.p1.y) << ','
        << format_double(c.p2.x) << ',' << format_double(c.p2.y) << ','
        << format_double(c.quality) << '\n';
  }
}

void write_correspondences(const std::string& path,
                           std::span<const Correspondence> corrs) {
  std::ofstream out(path);
  if (!out) throw Error("cannot open file for writing: " + path);
  write_correspondences(out, corrs);
}

}  // namespace ansac
