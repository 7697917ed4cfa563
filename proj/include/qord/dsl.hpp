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
 * @file dsl.hpp
 * Session language: let-bindings of rings, valuations, quasi-orders and lift
 * data, check directives with explicit sampling parameters, and show.
 *
 *   let K = frac(poly(Q, X))
 *   let v = degree() on K
 *   let q = at_infinity(1) on K
 *   check compat(v, q) samples(count=500, seed=7)
 *
 * Parsing resolves every name and checks every call against the signature
 * table, so a session that parses only fails at run time on preconditions.
 */

#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qord/report.hpp"
#include "qord/residue.hpp"

namespace qord {

struct SourcePos {
  int line = 1;
  int column = 1;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(SourcePos pos, const std::string& message);
  SourcePos pos;
};

struct Arg;

struct Expr {
  enum class Kind { call, name, number, string, list, words };
  Kind kind = Kind::name;
  SourcePos pos;
  std::string text;         // callee, identifier, number literal or string contents
  std::vector<Arg> args;    // call
  std::vector<Expr> items;  // list, words
};

struct Arg {
  std::string key;  // empty for positional arguments
  Expr value;
};

struct Stmt {
  enum class Kind { let, check, show };
  Kind kind = Kind::let;
  SourcePos pos;
  std::string name;  // bound name, check name or shown name
  Expr value;        // let
  std::optional<Expr> on;
  std::vector<Arg> args;     // check
  std::vector<Arg> samples;  // check
};

struct SessionAst {
  std::vector<Stmt> statements;
};

/// Throws ParseError for syntax errors, unknown constructors or checks,
/// arity and type mismatches, and unbound names.
SessionAst parse_session(const std::string& text);

/// Name and kind ("ring", "valuation", "quasi-order" or "lift data") of
/// every let-binding, in order.
std::vector<std::pair<std::string, std::string>> binding_kinds(const SessionAst& ast);

/// Defaults for sample keys a directive leaves out.
struct RunOptions {
  std::uint64_t seed = 42;
  std::size_t samples = 500;
  bool timing = false;
};

/// A row of the implication table recorded by a conditions directive.
struct ConditionRow {
  std::string label;
  std::array<bool, 5> flags{};
};

struct SessionResult {
  Report report;
  std::vector<ConditionRow> conditions;
  bool halted = false;  // a let-binding violated a precondition
  int exit_code() const { return halted ? 3 : qord::exit_code(report); }
};

SessionResult run_session(const SessionAst& ast, const RunOptions& options = {});

}  // namespace qord
