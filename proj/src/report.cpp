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

#include "qord/report.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

#include <nlohmann/json.hpp>

namespace qord {

using Json = nlohmann::ordered_json;

std::size_t Report::count(Status s) const {
  return static_cast<std::size_t>(
      std::count_if(checks.begin(), checks.end(), [&](const ReportEntry& e) { return e.status == s; }));
}

Status Report::overall() const {
  if (count(Status::hard_inconsistency)) return Status::hard_inconsistency;
  if (count(Status::fail)) return Status::fail;
  if (count(Status::inconclusive)) return Status::inconclusive;
  return Status::pass;
}

ReportEntry make_entry(const Finding& f, std::string name, std::uint64_t seed, std::int64_t elapsed_ms) {
  ReportEntry e;
  e.name = std::move(name);
  e.status = f.status;
  for (const auto& w : f.witness) e.witness.push_back(w.to_string());
  e.detail = f.detail;
  e.seed = seed;
  e.samples_used = f.samples_used;
  e.elapsed_ms = elapsed_ms;
  return e;
}

Format parse_format(const std::string& s) {
  if (s == "text") return Format::text;
  if (s == "json") return Format::json;
  throw std::invalid_argument("unknown format '" + s + "'");
}

namespace {

std::string status_label(Status s) {
  switch (s) {
    case Status::pass:
      return "PASS";
    case Status::fail:
      return "FAIL";
    case Status::inconclusive:
      return "INCONCLUSIVE";
    case Status::hard_inconsistency:
      return "HARD";
  }
  return "?";
}

std::string witness_text(const std::vector<std::string>& w) {
  if (w.empty()) return "";
  if (w.size() == 1) return w[0];
  std::string s = "(";
  for (std::size_t i = 0; i < w.size(); ++i) s += (i ? ", " : "") + w[i];
  return s + ")";
}

}  // namespace

std::string render_text(const Report& r) {
  std::ostringstream out;
  for (const auto& s : r.shown) out << s << '\n';
  std::size_t status_w = 6, name_w = 5;
  for (const auto& e : r.checks) {
    status_w = std::max(status_w, status_label(e.status).size());
    name_w = std::max(name_w, e.name.size());
  }
  if (!r.checks.empty()) {
    out << std::left << std::setw(static_cast<int>(status_w)) << "status" << "  " << std::setw(static_cast<int>(name_w))
        << "check" << "  " << std::right << std::setw(8) << "samples" << "  witness / detail\n";
  }
  for (const auto& e : r.checks) {
    out << std::left << std::setw(static_cast<int>(status_w)) << status_label(e.status) << "  "
        << std::setw(static_cast<int>(name_w)) << e.name << "  " << std::right << std::setw(8) << e.samples_used;
    std::string tail = witness_text(e.witness);
    if (!e.detail.empty()) tail += (tail.empty() ? "" : "  ") + e.detail;
    if (e.elapsed_ms) tail += (tail.empty() ? "" : "  ") + std::to_string(e.elapsed_ms) + " ms";
    if (!tail.empty()) out << "  " << tail;
    out << '\n';
  }
  const std::size_t n = r.checks.size();
  if (r.overall() == Status::pass && !r.count(Status::inconclusive)) {
    out << "all " << n << " checks passed (seed " << r.seed << ")\n";
  } else {
    out << n << " checks: " << r.count(Status::pass) << " passed, " << r.count(Status::fail) << " failed, "
        << r.count(Status::inconclusive) << " inconclusive, " << r.count(Status::hard_inconsistency)
        << " hard inconsistencies (seed " << r.seed << ")\n";
  }
  return out.str();
}

std::string render_json(const Report& r) {
  Json j;
  j["version"] = r.version;
  j["seed"] = r.seed;
  Json checks = Json::array();
  for (const auto& e : r.checks) {
    Json c;
    c["name"] = e.name;
    c["status"] = to_string(e.status);
    if (!e.witness.empty()) c["witness"] = e.witness;
    if (!e.detail.empty()) c["detail"] = e.detail;
    c["seed"] = e.seed;
    c["samples_used"] = e.samples_used;
    c["elapsed_ms"] = e.elapsed_ms;
    checks.push_back(std::move(c));
  }
  j["checks"] = std::move(checks);
  if (!r.shown.empty()) j["shown"] = r.shown;
  return j.dump(2) + "\n";
}

std::string render(const Report& r, Format format) {
  return format == Format::json ? render_json(r) : render_text(r);
}

Report parse_report_json(const std::string& text) {
  try {
    const Json j = Json::parse(text);
    Report r;
    r.version = j.at("version").get<int>();
    r.seed = j.at("seed").get<std::uint64_t>();
    for (const auto& c : j.at("checks")) {
      ReportEntry e;
      e.name = c.at("name").get<std::string>();
      e.status = parse_status(c.at("status").get<std::string>());
      if (c.contains("witness")) e.witness = c["witness"].get<std::vector<std::string>>();
      if (c.contains("detail")) e.detail = c["detail"].get<std::string>();
      e.seed = c.at("seed").get<std::uint64_t>();
      e.samples_used = c.at("samples_used").get<std::size_t>();
      e.elapsed_ms = c.at("elapsed_ms").get<std::int64_t>();
      r.checks.push_back(std::move(e));
    }
    if (j.contains("shown")) r.shown = j["shown"].get<std::vector<std::string>>();
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed report: ") + e.what());
  }
}

int exit_code(const Report& r) {
  switch (r.overall()) {
    case Status::hard_inconsistency:
      return 4;
    case Status::fail:
      return 1;
    default:
      return 0;
  }
}

}  // namespace qord
