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

#pragma once

#include <exception>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qord/ring.hpp"
#include "qord/sample.hpp"

namespace qord {

enum class Status { pass, fail, inconclusive, hard_inconsistency };

/// A constructor or check precondition does not hold; execution halts.
class PreconditionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string to_string(Status s);
Status parse_status(const std::string& s);

/// Outcome of one sampled property.
struct Finding {
  std::string name;
  Status status = Status::pass;
  std::vector<Element> witness;
  std::string detail;
  std::size_t samples_used = 0;

  bool ok() const { return status == Status::pass; }
};

struct Findings {
  std::vector<Finding> items;

  void add(Finding f) { items.push_back(std::move(f)); }
  void append(const Findings& other);
  bool all_pass() const;
  /// Worst status: hard-inconsistency, then fail, then inconclusive.
  Status overall() const;
  const Finding* find(const std::string& name) const;
  const Finding* first_problem() const;
  std::size_t samples_used() const;
};

/// "X" for one element, "(X+1, 1)" for several.
std::string format_witness(const std::vector<Element>& w);

/// Builds a finding from a sweep whose visitor reports violations. An
/// exception thrown while evaluating a tuple counts as a violation.
template <class F>
Finding sweep_singles(std::string name, const Sweep& sweep, const std::vector<Element>& pool, F&& violated) {
  Finding f;
  f.name = std::move(name);
  f.samples_used = sweep.singles(pool, [&](const Element& x) {
    try {
      if (!violated(x)) return false;
    } catch (const std::exception& e) {
      f.detail = std::string("error: ") + e.what();
    }
    f.status = Status::fail;
    f.witness = {x};
    return true;
  });
  return f;
}

template <class F>
Finding sweep_pairs(std::string name, const Sweep& sweep, const std::vector<Element>& pool, F&& violated) {
  Finding f;
  f.name = std::move(name);
  f.samples_used = sweep.pairs(pool, [&](const Element& x, const Element& y) {
    try {
      if (!violated(x, y)) return false;
    } catch (const std::exception& e) {
      f.detail = std::string("error: ") + e.what();
    }
    f.status = Status::fail;
    f.witness = {x, y};
    return true;
  });
  return f;
}

template <class F>
Finding sweep_triples(std::string name, const Sweep& sweep, const std::vector<Element>& pool, F&& violated) {
  Finding f;
  f.name = std::move(name);
  f.samples_used = sweep.triples(pool, [&](const Element& x, const Element& y, const Element& z) {
    try {
      if (!violated(x, y, z)) return false;
    } catch (const std::exception& e) {
      f.detail = std::string("error: ") + e.what();
    }
    f.status = Status::fail;
    f.witness = {x, y, z};
    return true;
  });
  return f;
}

}  // namespace qord
