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
 * @file corpus.hpp
 * Built-in named sessions with golden fragments. A fragment lists only the
 * checks that pin down an instance (condition flags and named witnesses);
 * running the corpus diffs each session's report against its fragment.
 */

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qord/dsl.hpp"

namespace qord {

struct GoldenEntry {
  std::string check;
  Status status = Status::pass;
  std::optional<std::vector<std::string>> witness;
};

struct CorpusInstance {
  std::string name;
  std::string about;
  std::vector<std::string> tags;
  std::string session;  // source text
  std::vector<GoldenEntry> expect;
};

/// All instances, sorted by name.
const std::vector<CorpusInstance>& corpus_instances();
/// Throws std::out_of_range for unknown names.
const CorpusInstance& corpus_instance(const std::string& name);
/// Parses a golden fragment; throws std::invalid_argument when malformed.
CorpusInstance parse_golden(const std::string& json, std::string session);

struct CorpusRun {
  Report report;                       // one entry per golden expectation
  std::vector<TableInstance> rows;     // condition flags per instance
  std::vector<SessionResult> sessions; // in selection order
};

/// Runs the selected instances ("all" selects every instance) and diffs
/// each against its golden fragment. Throws std::invalid_argument on an
/// empty selection and std::out_of_range on an unknown name.
CorpusRun run_corpus(const std::vector<std::string>& selection, const RunOptions& options = {});
/// Same for instances given directly, in the order given.
CorpusRun run_instances(const std::vector<CorpusInstance>& instances, const RunOptions& options = {});

/// Implication table over every corpus instance that reports conditions.
ImplicationTable corpus_table(const RunOptions& options, std::vector<TableInstance>* rows = nullptr);

}  // namespace qord
