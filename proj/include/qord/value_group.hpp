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
 * @file value_group.hpp
 * Totally ordered abelian groups Z^k (lexicographic), with a top element
 * for valuations of zero.
 */

#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "qord/poly.hpp"

namespace qord {

class GroupMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Element of Z^k with lexicographic order, or infinity.
class Value {
 public:
  static Value infinity() { return Value(); }
  static Value zero(std::size_t rank) { return Value(std::vector<Integer>(rank, 0)); }
  static Value of(long v) { return Value(std::vector<Integer>{Integer(v)}); }
  explicit Value(std::vector<Integer> coords) : finite_(true), coords_(std::move(coords)) {}

  bool is_infinite() const { return !finite_; }
  const std::vector<Integer>& coords() const { return coords_; }
  std::size_t rank() const { return coords_.size(); }
  bool is_zero() const;
  /// Sign under the lexicographic order: -1, 0, 1 (infinity is +1).
  int sign() const;

  std::string to_string() const;

 private:
  Value() = default;
  bool finite_ = false;
  std::vector<Integer> coords_;
};

/// Three-way comparison; infinity is the largest element.
int compare(const Value& a, const Value& b);
inline bool operator<(const Value& a, const Value& b) { return compare(a, b) < 0; }
inline bool operator<=(const Value& a, const Value& b) { return compare(a, b) <= 0; }
inline bool operator>(const Value& a, const Value& b) { return compare(a, b) > 0; }
inline bool operator>=(const Value& a, const Value& b) { return compare(a, b) >= 0; }
inline bool operator==(const Value& a, const Value& b) { return compare(a, b) == 0; }
inline bool operator!=(const Value& a, const Value& b) { return compare(a, b) != 0; }

Value operator+(const Value& a, const Value& b);
/// Negation of a finite value.
Value operator-(const Value& a);
Value operator-(const Value& a, const Value& b);
Value scale(const Value& a, long k);
const Value& min_value(const Value& a, const Value& b);
const Value& max_value(const Value& a, const Value& b);

/// Parses "inf", an integer, or "(a,b,...)".
Value parse_value(const std::string& text);

struct Mod2Decomposition {
  std::vector<std::size_t> index_set;  // I with gamma = sum_{i in I} basis_i + 2*delta
  Value delta;
};

/**
 * Z^k under the lexicographic order, with a basis whose classes form a
 * basis of Gamma/2*Gamma. Rank 0 is the trivial group.
 */
class ValueGroup {
 public:
  static ValueGroup trivial() { return ValueGroup(0); }
  static ValueGroup integers() { return ValueGroup(1); }
  static ValueGroup lex(std::size_t k) { return ValueGroup(k); }
  /// Throws if the basis does not reduce to a basis modulo 2.
  static ValueGroup with_basis(std::size_t k, std::vector<Value> basis);

  std::size_t rank() const { return rank_; }
  const std::vector<Value>& basis() const { return basis_; }
  Value zero() const { return Value::zero(rank_); }
  Value unit(std::size_t i) const;
  bool contains(const Value& v) const { return v.is_infinite() || v.rank() == rank_; }
  std::string describe() const;

  Mod2Decomposition mod2_decompose(const Value& gamma) const;

 private:
  explicit ValueGroup(std::size_t k);
  std::size_t rank_;
  std::vector<Value> basis_;
};

/// Embeds a value of rank r into rank k >= r as the last r coordinates.
Value embed_value(const Value& v, std::size_t k);
/// Drops the first `n` coordinates.
Value drop_leading(const Value& v, std::size_t n);

}  // namespace qord
