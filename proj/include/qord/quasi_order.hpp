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
 * @file quasi_order.hpp
 * Quasi-orders as comparator functions, their constructors (sign orders,
 * valuation-induced, fraction-field extensions, restrictions) and the
 * sampled axiom and lemma suites.
 */

#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qord/check.hpp"
#include "qord/valuation.hpp"

namespace qord {

enum class QoClass { order, proper };
std::string to_string(QoClass c);

enum class Cmp { less, equivalent, greater };
std::string to_string(Cmp c);

/// x <= y iff sign(y - x) >= 0; the support is sign^-1(0).
struct SignOrder {
  std::string name;
  RingPtr ring;
  std::function<int(const Element&)> sign;
  Ideal support;
};

/// The unique order on Z or Q.
SignOrder sign_standard(const RingPtr& ring);
/// f >= 0 iff f(0) >= 0 on a polynomial ring; support is the ideal of all variables.
SignOrder sign_at_origin(const RingPtr& poly_ring);
/// X -> +inf (direction 1) or X -> -inf (direction -1) on a univariate
/// polynomial ring or its fraction field.
SignOrder sign_at_infinity(const RingPtr& ring, int direction);
/// X -> 0+ on a univariate polynomial ring or its fraction field.
SignOrder sign_at_zero_plus(const RingPtr& ring);
/// Negated standard sign on Z or Q; sign(1) = -1 violates QR1.
SignOrder sign_flipped(const RingPtr& ring);

class QuasiOrder;
using QuasiOrderPtr = std::shared_ptr<const QuasiOrder>;

class QuasiOrder {
 public:
  std::string name;
  /// sign-order, valuation-induced, residue-induced, lifted, fraction-extended, restricted.
  std::string provenance;
  RingPtr ring;
  std::function<bool(const Element&, const Element&)> le_fn;
  std::optional<QoClass> declared;
  /// Declared support; ignored when `is_zero` is set.
  Ideal support;
  /// Zero test on carriers given by representatives (residue domains).
  std::function<bool(const Element&)> is_zero;
  /// Maps a pool of ring elements to elements of the carrier.
  std::function<std::vector<Element>(const std::vector<Element>&)> carrier;
  std::vector<Element> distinguished;
  /// Inducing valuation of a valuation-induced quasi-order.
  ValuationPtr valuation;

  bool le(const Element& x, const Element& y) const;
  bool sim(const Element& x, const Element& y) const { return le(x, y) && le(y, x); }
  bool strict(const Element& x, const Element& y) const { return le(x, y) && !le(y, x); }
  /// Declared zero of the carrier: support membership, or `is_zero`.
  bool declared_zero(const Element& x) const;
};

QuasiOrderPtr from_sign_order(const SignOrder& s);
/// x <= y iff v(y) <= v(x).
QuasiOrderPtr from_valuation(const ValuationPtr& v);
/// (x/y) <= (a/b) iff x*y*b^2 <= a*b*y^2, on the fraction field of R/E_0.
QuasiOrderPtr frac_extend_qo(const QuasiOrderPtr& q);
/// x <= y iff map(x) <= map(y), for x, y in `ring`.
QuasiOrderPtr restrict_qo(const QuasiOrderPtr& q, const RingPtr& ring, std::function<Element(const Element&)> map,
                          Ideal support, std::string name);

Cmp qcmp(const QuasiOrder& q, const Element& x, const Element& y);
bool support_member(const QuasiOrder& q, const Element& x);

/// Proper iff 0 < -1, order iff -1 < 0; throws std::domain_error if -1 ~ 0.
QoClass classify_qo(const QuasiOrder& q);
/// classify_qo cross-checked against the declared class.
Finding classify_check(const QuasiOrder& q);

std::vector<Element> carrier_pool(const QuasiOrder& q, const std::vector<Element>& pool);

/// Reflexivity, totality, transitivity, QR1-QR5, and the prime-ideal and
/// declared-support properties of E_0.
Findings check_qo_axioms(const QuasiOrder& q, const std::vector<Element>& pool, const Sweep& sweep);
/// The ten lemma checks derived from the axioms.
Findings check_derived_lemmas(const QuasiOrder& q, const std::vector<Element>& pool, const Sweep& sweep);

/// Sampled agreement of two comparators on pairs of `pool`.
Finding agreement(const std::string& name, const QuasiOrder& a, const QuasiOrder& b, const std::vector<Element>& pool,
                  const Sweep& sweep);

}  // namespace qord
