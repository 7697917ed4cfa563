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
 * @file valuation.hpp
 * Valuations v: R -> Gamma u {inf} and their constructors: p-adic, trivial
 * (with a chosen prime support), Gauss extensions to polynomial rings,
 * fraction-field extensions, composites and quotients w/v.
 *
 * Manis-ness and locality are declared by each constructor together with
 * witness data; they are never inferred from samples.
 */

#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qord/check.hpp"
#include "qord/ring.hpp"
#include "qord/value_group.hpp"

namespace qord {

/// Canonical form for the residue domain R_v / I_v.
struct ResidueMap {
  RingPtr target;
  std::function<Element(const Element&)> reduce;  // R_v -> target
  std::function<Element(const Element&)> lift;    // target -> R_v
};

enum class Position { in_support, in_ideal, in_units, outside };
std::string to_string(Position p);

class Valuation;
using ValuationPtr = std::shared_ptr<const Valuation>;

class Valuation {
 public:
  std::string name;
  std::string provenance;
  RingPtr ring;
  ValueGroup group = ValueGroup::trivial();
  std::function<Value(const Element&)> eval_fn;
  Ideal support;
  bool manis = false;
  std::function<Element(const Value&)> preimage_fn;
  /// Returns an element whose value is gamma or -gamma (may be empty).
  std::function<Element(const Value&)> witness_fn;
  bool local = false;
  std::optional<ResidueMap> residue;
  std::vector<Element> distinguished;
  Integer prime = 0;             // set by the p-adic constructor
  bool negative_degree = false;  // v = -deg on a univariate ring or its fraction field

  /// Value of x; throws RingMismatch for elements of other rings.
  Value operator()(const Element& x) const;
  /// Deterministic element of value gamma; requires `manis`.
  Element preimage(const Value& gamma) const;
  /// Element whose value is gamma or -gamma.
  Element signed_witness(const Value& gamma) const;

  bool nontrivial() const { return group.rank() > 0; }
  bool in_ring(const Element& x) const { return (*this)(x).sign() >= 0; }
  bool in_ideal(const Element& x) const { return (*this)(x).sign() > 0; }
  bool in_units(const Element& x) const { return (*this)(x).is_zero(); }
};

ValuationPtr padic(const Integer& p, const RingPtr& ring);
ValuationPtr trivial(const RingPtr& ring, Ideal support = Ideal::zero());
/// v(f) = min over monomials of u(coefficient) + sum exponent * gamma.
ValuationPtr gauss_extend(const ValuationPtr& u, const RingPtr& poly_ring, std::vector<Value> gammas);
/// -deg on a univariate polynomial ring or its fraction field.
ValuationPtr degree_valuation(const RingPtr& ring);
ValuationPtr frac_extend_val(const ValuationPtr& v);
/// w(x) = (v(x), u(res(x * s(-v(x))))) with s built from v's uniformizers.
ValuationPtr composite(const ValuationPtr& v, const ValuationPtr& u);
/// w/v on the residue domain of v.
ValuationPtr quotient_val(const ValuationPtr& w, const ValuationPtr& v);
/// k * v for k > 0.
ValuationPtr scaled(const ValuationPtr& v, long k);

Position classify_position(const Valuation& v, const Element& x);

/// Elements of R_v built from the pool (shifted into R_v when possible).
std::vector<Element> ring_samples(const Valuation& v, const std::vector<Element>& pool);
/// Elements of I_v built from the pool.
std::vector<Element> ideal_samples(const Valuation& v, const std::vector<Element>& pool);

Findings check_val_axioms(const Valuation& v, const std::vector<Element>& pool, const Sweep& sweep);

/// Evidence that v is a coarsening of w (v <= w).
struct CoarseningReport {
  bool coarsening = false;
  Findings findings;
};
CoarseningReport coarsening_check(const Valuation& v, const Valuation& w, const std::vector<Element>& pool,
                                  const Sweep& sweep);

Finding equivalent_check(const Valuation& v, const Valuation& w, const std::vector<Element>& pool,
                         const Sweep& sweep);

/// Sample form of the well-definedness of w/v: w(a) = w(a + c) and the
/// residue of a is unchanged, for a in U_v and c in I_v.
Findings quotient_well_defined(const Valuation& w, const Valuation& v, const std::vector<Element>& pool,
                               const Sweep& sweep);

}  // namespace qord
