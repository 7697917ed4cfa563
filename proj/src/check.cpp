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

#include "qord/check.hpp"

namespace qord {

std::string to_string(Status s) {
  switch (s) {
    case Status::pass:
      return "pass";
    case Status::fail:
      return "fail";
    case Status::inconclusive:
      return "inconclusive";
    case Status::hard_inconsistency:
      return "hard-inconsistency";
  }
  return "?";
}

Status parse_status(const std::string& s) {
  if (s == "pass") return Status::pass;
  if (s == "fail") return Status::fail;
  if (s == "inconclusive") return Status::inconclusive;
  if (s == "hard-inconsistency") return Status::hard_inconsistency;
  throw std::invalid_argument("unknown status '" + s + "'");
}

void Findings::append(const Findings& other) {
  items.insert(items.end(), other.items.begin(), other.items.end());
}

bool Findings::all_pass() const {
  for (const auto& f : items)
    if (!f.ok()) return false;
  return true;
}

namespace {

int severity(Status s) {
  switch (s) {
    case Status::pass:
      return 0;
    case Status::inconclusive:
      return 1;
    case Status::fail:
      return 2;
    case Status::hard_inconsistency:
      return 3;
  }
  return 0;
}

}  // namespace

Status Findings::overall() const {
  Status worst = Status::pass;
  for (const auto& f : items)
    if (severity(f.status) > severity(worst)) worst = f.status;
  return worst;
}

const Finding* Findings::find(const std::string& name) const {
  for (const auto& f : items)
    if (f.name == name) return &f;
  return nullptr;
}

const Finding* Findings::first_problem() const {
  for (const auto& f : items)
    if (!f.ok()) return &f;
  return nullptr;
}

std::size_t Findings::samples_used() const {
  std::size_t n = 0;
  for (const auto& f : items) n += f.samples_used;
  return n;
}

std::string format_witness(const std::vector<Element>& w) {
  if (w.empty()) return "";
  if (w.size() == 1) return w[0].to_string();
  std::string s = "(";
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += ", ";
    s += w[i].to_string();
  }
  return s + ")";
}

}  // namespace qord
