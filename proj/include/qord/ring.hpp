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
 * @file ring.hpp
 * Exact commutative rings: Z, Q, polynomial rings over them, quotients by
 * prime ideals and fraction fields.
 *
 * Every element stores a numerator/denominator pair of rational
 * polynomials over the variables of its ring; the ring decides which pairs
 * are members and how they are normalized.
 */

#pragma once

#include <functional>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "qord/poly.hpp"

namespace qord {

class Element;
class Ring;
using RingPtr = std::shared_ptr<const Ring>;

/// Raised when two operands live in different rings.
class RingMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when a value is not a member of the requested ring.
class NotAMember : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

struct Ideal {
  enum class Kind { zero, principal, variables, valuation_support };

  Kind kind = Kind::zero;
  Integer generator;                 // principal: prime p in Z
  std::vector<std::size_t> vars;     // variables: indices that generate
  std::string label;                 // valuation_support: name of the valuation
  std::function<bool(const Element&)> member;  // valuation_support: test in the base ring

  static Ideal zero() { return {}; }
  static Ideal principal(const Integer& p);
  static Ideal variables(std::vector<std::size_t> vars);
  static Ideal valuation_support(std::string label, std::function<bool(const Element&)> member);

  /// Membership test for an element of the ring this ideal lives in.
  bool contains(const Element& x) const;
  std::string describe(const std::vector<std::string>& names) const;
};

class Ring : public std::enable_shared_from_this<Ring> {
 public:
  enum class Kind { integers, rationals, polynomial, quotient, fraction };

  static RingPtr integers();
  static RingPtr rationals();
  static RingPtr polynomial(const RingPtr& base, std::vector<std::string> vars);
  /// Quotient by a prime ideal. Quotients that are isomorphic to a simpler
  /// ring (zero ideal, or all variables of a polynomial ring) return it.
  static RingPtr quotient(const RingPtr& base, Ideal ideal);
  static RingPtr fraction(const RingPtr& base);

  Kind kind() const { return kind_; }
  const RingPtr& base() const { return base_; }
  const Ideal& ideal() const { return ideal_; }
  const std::vector<std::string>& variables() const { return vars_; }
  std::size_t nvars() const { return vars_.size(); }
  std::size_t variable_index(const std::string& name) const;

  bool is_field() const;
  /// Z/pZ.
  bool is_prime_field() const { return kind_ == Kind::quotient && ideal_.kind == Ideal::Kind::principal; }
  /// Characteristic p of a prime field, 0 otherwise.
  Integer characteristic() const;
  /// Payload equality decides element equality.
  bool canonical() const;
  /// Integral coefficients are required (Z, Z[...], or quotients of those).
  bool integral() const;

  const std::string& describe() const { return description_; }

  Element zero() const;
  Element one() const;
  Element from_integer(const Integer& n) const;
  Element from_rational(const Rational& r) const;
  Element variable(const std::string& name) const;

  /// Normalizes a payload in place; throws NotAMember if it is not an element.
  void canonicalize(Poly& num, Poly& den) const;
  /// Zero test for a numerator payload (ideal membership for quotients).
  bool payload_zero(const Poly& num) const;

 private:
  Ring(Kind kind, RingPtr base, Ideal ideal, std::vector<std::string> vars);
  void reduce_in_base(Poly& p) const;

  Kind kind_;
  RingPtr base_;
  Ideal ideal_;
  std::vector<std::string> vars_;
  std::string description_;
};

bool same_ring(const RingPtr& a, const RingPtr& b);

class Element {
 public:
  Element(RingPtr ring, Poly num, Poly den);
  Element(RingPtr ring, Poly num);

  const RingPtr& ring() const { return ring_; }
  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }

  bool is_zero() const;
  /// Rational value of a constant element; throws if not constant.
  Rational as_rational() const;
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }

  std::string to_string() const;

  Element operator-() const;
  friend Element operator+(const Element& a, const Element& b);
  friend Element operator-(const Element& a, const Element& b);
  friend Element operator*(const Element& a, const Element& b);
  friend bool operator==(const Element& a, const Element& b);
  friend bool operator!=(const Element& a, const Element& b) { return !(a == b); }

 private:
  RingPtr ring_;
  Poly num_;
  Poly den_;
};

/// Exact division; the ring must be a field, or the quotient must exist.
Element divide(const Element& a, const Element& b);
/// Integer power; negative exponents require an invertible base.
Element power(const Element& a, long e);
bool is_unit(const Element& a);

/// Canonical map between rings, matching variables by name. Throws
/// NotAMember when the image does not exist (e.g. 1/2 into Z).
Element coerce(const Element& x, const RingPtr& target);

/// Image of x in R/I, where R is the ring of x.
Element quotient_reduce(const Element& x, const Ideal& ideal);

/// Representative in `parent` of an element of a quotient of it.
Element representative(const Element& e, const RingPtr& parent);

Element parse_element(const RingPtr& ring, const std::string& text);

}  // namespace qord
