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

// Command-line driver: run sessions, list and run the corpus, print the
// implication table.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "qord/corpus.hpp"

namespace {

constexpr int kUsage = 2;

struct Common {
  std::uint64_t seed = 42;
  std::size_t samples = 500;
  std::string format = "text";
  bool timing = false;

  void attach(CLI::App* app, bool with_timing = true) {
    app->add_option("--seed", seed, "Seed for every check without an explicit seed");
    app->add_option("--samples", samples, "Sample count for every check without an explicit count")
        ->check(CLI::Range(std::size_t{1}, std::size_t{1000000}));
    app->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
    if (with_timing) app->add_flag("--timing", timing, "Record elapsed milliseconds per check");
  }
  qord::RunOptions options() const { return {seed, samples, timing}; }
  qord::Format fmt() const { return qord::parse_format(format); }
};

int run_file(const std::string& path, const Common& c) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    std::cerr << "qord: cannot read " << path << "\n";
    return kUsage;
  }
  std::stringstream text;
  text << in.rdbuf();
  qord::SessionAst ast;
  try {
    ast = qord::parse_session(text.str());
  } catch (const qord::ParseError& e) {
    std::cerr << path << ":" << e.what() << "\n";
    return kUsage;
  }
  qord::SessionResult r = qord::run_session(ast, c.options());
  std::cout << qord::render(r.report, c.fmt());
  return r.exit_code();
}

int corpus_list(const Common& c) {
  const auto& all = qord::corpus_instances();
  if (c.fmt() == qord::Format::json) {
    nlohmann::ordered_json j = nlohmann::ordered_json::array();
    for (const auto& i : all) j.push_back({{"name", i.name}, {"about", i.about}, {"tags", i.tags}});
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  std::size_t w = 0;
  for (const auto& i : all) w = std::max(w, i.name.size());
  for (const auto& i : all) {
    std::cout << i.name << std::string(w - i.name.size() + 2, ' ') << i.about;
    for (const auto& t : i.tags) std::cout << " [" << t << "]";
    std::cout << "\n";
  }
  return 0;
}

int corpus_run(const std::vector<std::string>& names, const Common& c) {
  qord::CorpusRun run;
  try {
    run = qord::run_corpus(names, c.options());
  } catch (const std::out_of_range& e) {
    std::cerr << "qord: " << e.what() << "\n";
    return kUsage;
  }
  std::cout << qord::render(run.report, c.fmt());
  return qord::exit_code(run.report);
}

int table(const Common& c) {
  std::vector<qord::TableInstance> rows;
  qord::ImplicationTable t = qord::corpus_table(c.options(), &rows);
  bool violated = false, missing = false;
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = 0; j < 5; ++j) {
      const auto& cell = t.cells[i][j];
      if (cell.diagonal) continue;
      violated = violated || (cell.implied && !cell.witnesses.empty());
      missing = missing || (!cell.implied && cell.witnesses.empty());
    }
  if (c.fmt() == qord::Format::json) {
    nlohmann::ordered_json j;
    j["version"] = 1;
    j["seed"] = c.seed;
    j["rows"] = nlohmann::ordered_json::array();
    for (const auto& r : rows) j["rows"].push_back({{"name", r.name}, {"flags", r.flags}});
    j["cells"] = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < 5; ++i)
      for (std::size_t k = 0; k < 5; ++k) {
        const auto& cell = t.cells[i][k];
        if (cell.diagonal) continue;
        j["cells"].push_back(
            {{"from", i + 1}, {"to", k + 1}, {"implied", cell.implied}, {"witnesses", cell.witnesses}, {"ok", cell.ok()}});
      }
    j["consistent"] = t.consistent();
    std::cout << j.dump(2) << "\n";
  } else {
    for (const auto& r : rows) {
      std::cout << r.name << ":";
      for (bool f : r.flags) std::cout << ' ' << (f ? 'T' : 'F');
      std::cout << "\n";
    }
    std::cout << "\n" << qord::render_table(t);
  }
  return violated ? 4 : missing ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"qord: valuations and quasi-orders on commutative rings"};
  app.require_subcommand(1);

  Common run_opts, list_opts, corpus_opts, table_opts;
  std::string file;
  std::vector<std::string> names;

  auto* run = app.add_subcommand("run", "Run a session file");
  run->add_option("file", file, "Session file")->required();
  run_opts.attach(run);

  auto* corpus = app.add_subcommand("corpus", "Built-in instances");
  corpus->require_subcommand(1);
  auto* list = corpus->add_subcommand("list", "List corpus instances");
  list->add_option("--format", list_opts.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  auto* crun = corpus->add_subcommand("run", "Run instances and diff against their golden fragments");
  crun->add_option("names", names, "Instance names, or all")->required();
  corpus_opts.attach(crun);

  auto* tab = app.add_subcommand("table", "Print the implication table with corpus witnesses");
  table_opts.attach(tab, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*run) return run_file(file, run_opts);
    if (*list) return corpus_list(list_opts);
    if (*crun) return corpus_run(names, corpus_opts);
    if (*tab) return table(table_opts);
  } catch (const std::exception& e) {
    std::cerr << "qord: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
