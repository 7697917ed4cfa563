// Copyright 2026 The qord Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/**
 * @file report.hpp
 * Check reports: one entry per finding, rendered as an aligned text table or
 * as stable-key JSON that parses back to the same report.
 */

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qord/check.hpp"

namespace qord {

struct ReportEntry {
  std::string name;
  Status status = Status::pass;
  std::vector<std::string> witness;  // canonical element syntax
  std::string detail;
  std::uint64_t seed = 0;
  std::size_t samples_used = 0;
  std::int64_t elapsed_ms = 0;
  friend bool operator==(const ReportEntry&, const ReportEntry&) = default;
};

struct Report {
  int version = 1;
  std::uint64_t seed = 42;
  std::vector<ReportEntry> checks;
  std::vector<std::string> shown;  // output of show directives
  friend bool operator==(const Report&, const Report&) = default;

  std::size_t count(Status s) const;
  /// Worst status over all entries.
  Status overall() const;
};

ReportEntry make_entry(const Finding& f, std::string name, std::uint64_t seed, std::int64_t elapsed_ms = 0);

enum class Format { text, json };
Format parse_format(const std::string& s);

std::string render_text(const Report& r);
std::string render_json(const Report& r);
std::string render(const Report& r, Format format);
/// Inverse of render_json; throws std::invalid_argument on malformed input.
Report parse_report_json(const std::string& text);

/// Process exit status of a completed run: 4 on a hard inconsistency, 1 on a
/// failure, 0 otherwise.
int exit_code(const Report& r);

}  // namespace qord
