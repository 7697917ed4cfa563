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

#include "qord/corpus.hpp"

#include <algorithm>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace qord {

namespace detail {
struct EmbeddedFile {
  const char* name;
  const char* session;
  const char* golden;
};
// Generated at configure time from corpus/*.qord and corpus/*.golden.json.
const std::vector<EmbeddedFile>& embedded_corpus();
}  // namespace detail

CorpusInstance parse_golden(const std::string& json, std::string session) {
  try {
    const auto j = nlohmann::json::parse(json);
    CorpusInstance c;
    c.name = j.at("instance").get<std::string>();
    c.about = j.at("about").get<std::string>();
    c.tags = j.value("tags", std::vector<std::string>{});
    c.session = std::move(session);
    for (const auto& e : j.at("expect")) {
      GoldenEntry g;
      g.check = e.at("check").get<std::string>();
      g.status = parse_status(e.at("status").get<std::string>());
      if (e.contains("witness")) g.witness = e["witness"].get<std::vector<std::string>>();
      c.expect.push_back(std::move(g));
    }
    return c;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed golden fragment: ") + e.what());
  }
}

const std::vector<CorpusInstance>& corpus_instances() {
  static const std::vector<CorpusInstance> all = [] {
    std::vector<CorpusInstance> out;
    for (const auto& f : detail::embedded_corpus()) {
      CorpusInstance c = parse_golden(f.golden, f.session);
      if (c.name != f.name) throw std::logic_error("golden fragment of " + std::string(f.name) + " names " + c.name);
      out.push_back(std::move(c));
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.name < b.name; });
    return out;
  }();
  return all;
}

const CorpusInstance& corpus_instance(const std::string& name) {
  for (const auto& c : corpus_instances())
    if (c.name == name) return c;
  throw std::out_of_range("unknown corpus instance '" + name + "'");
}

namespace {

std::string witness_text(const std::vector<std::string>& w) {
  std::string s = "(";
  for (std::size_t i = 0; i < w.size(); ++i) s += (i ? ", " : "") + w[i];
  return s + ")";
}

std::vector<const CorpusInstance*> select(const std::vector<std::string>& selection) {
  if (selection.empty()) throw std::invalid_argument("empty corpus selection");
  std::vector<const CorpusInstance*> out;
  for (const auto& name : selection) {
    if (name == "all") {
      for (const auto& c : corpus_instances()) out.push_back(&c);
    } else {
      out.push_back(&corpus_instance(name));
    }
  }
  return out;
}

ReportEntry diff(const CorpusInstance& c, const GoldenEntry& g, const SessionResult& s, std::uint64_t seed) {
  ReportEntry e;
  e.name = c.name + ": " + g.check;
  e.seed = seed;
  auto it = std::find_if(s.report.checks.begin(), s.report.checks.end(),
                         [&](const ReportEntry& r) { return r.name == g.check; });
  if (it == s.report.checks.end()) {
    e.status = Status::fail;
    e.detail = s.halted ? "session halted before this check" : "check missing from the session report";
    return e;
  }
  e.witness = it->witness;
  e.samples_used = it->samples_used;
  e.elapsed_ms = it->elapsed_ms;
  e.seed = it->seed;
  std::string want = to_string(g.status), got = to_string(it->status);
  bool ok = it->status == g.status;
  if (g.witness) {
    want += " " + witness_text(*g.witness);
    got += " " + witness_text(it->witness);
    ok = ok && it->witness == *g.witness;
  }
  e.status = ok ? Status::pass : Status::fail;
  e.detail = ok ? "matches " + want : "expected " + want + ", got " + got;
  return e;
}

}  // namespace

CorpusRun run_corpus(const std::vector<std::string>& selection, const RunOptions& options) {
  std::vector<CorpusInstance> chosen;
  for (const CorpusInstance* c : select(selection)) chosen.push_back(*c);
  return run_instances(chosen, options);
}

CorpusRun run_instances(const std::vector<CorpusInstance>& instances, const RunOptions& options) {
  CorpusRun run;
  run.report.seed = options.seed;
  if (instances.empty()) throw std::invalid_argument("empty corpus selection");
  for (const CorpusInstance& c : instances) {
    SessionResult s = run_session(parse_session(c.session), options);
    for (const auto& g : c.expect) run.report.checks.push_back(diff(c, g, s, options.seed));
    for (const auto& row : s.conditions) {
      std::string label = row.label.empty() ? c.name : c.name + "/" + row.label;
      run.rows.push_back({label, row.flags});
    }
    run.sessions.push_back(std::move(s));
  }
  return run;
}

ImplicationTable corpus_table(const RunOptions& options, std::vector<TableInstance>* rows) {
  CorpusRun run = run_corpus({"all"}, options);
  if (rows) *rows = run.rows;
  return implication_table(run.rows);
}

}  // namespace qord
