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
 * @file residue.hpp
 * Convexity and compatibility, the quasi-order induced on the residue
 * domain, the five compatibility conditions and their implication table,
 * local valuations, special* valuations and rank.
 */

#pragma once

#include <array>
#include <functional>
#include <string>
#include <vector>

#include "qord/quasi_order.hpp"

namespace qord {

/// 0 <= y <= z and z in S implies y in S. Witness: y.
/// Throws PreconditionError if 0 is not in S or S != -S on the pool.
Finding is_convex(const std::string& name, const std::function<bool(const Element&)>& member, const QuasiOrder& q,
                  const std::vector<Element>& pool, const Sweep& sweep);
/// 0 <= y <= z implies v(z) <= v(y). Witness: (y, z).
Finding is_compatible(const Valuation& v, const QuasiOrder& q, const std::vector<Element>& pool, const Sweep& sweep);
/// c < 1 for every sampled c in I_v. Witness: c.
Finding iv_below_one(const Valuation& v, const QuasiOrder& q, const std::vector<Element>& pool, const Sweep& sweep);

/// The pool extended by elements of R_v and I_v built from it.
std::vector<Element> condition_pool(const Valuation& v, const std::vector<Element>& pool);

/// x' <= y' iff v(x - y) > 0 or x <= y, on representatives in R_v.
QuasiOrderPtr residue_rule_qo(const QuasiOrderPtr& q, const ValuationPtr& v);
/// The residue rule on the residue target of v when v has one, otherwise on
/// representatives. No precondition is checked here.
QuasiOrderPtr residue_qo(const QuasiOrderPtr& q, const ValuationPtr& v);
/// Perturbing either representative by sampled I_v elements never changes
/// the verdict of the residue rule. Witness: (x, y, c).
Finding representative_invariance(const QuasiOrder& q, const Valuation& v, const std::vector<Element>& pool,
                                  const Sweep& sweep);

/// Conditions of the implication table:
/// (1) compatible, (2) R_v convex, (3) I_v convex, (4) I_v < 1,
/// (5) the residue rule is a well-defined quasi-order with support {0}.
struct CompatReport {
  std::array<bool, 5> flags{};
  std::array<Finding, 5> evidence;
  std::uint64_t seed = 0;
  std::size_t samples_used = 0;
};
CompatReport conditions(const QuasiOrderPtr& q, const ValuationPtr& v, const std::vector<Element>& pool,
                        const Sweep& sweep);

/// Equivalence of compatibility, convexity of I_v and the residue rule
/// (and convexity of R_v when v is nontrivial) for Manis v, with the
/// consequences I_v < 1, class preservation and the residue valuation.
struct TheoremReport {
  CompatReport conditions;
  bool nontrivial = false;
  Findings findings;
};
TheoremReport theorem_report(const QuasiOrderPtr& q, const ValuationPtr& v, const std::vector<Element>& pool,
                             const Sweep& sweep);

struct TableInstance {
  std::string name;
  std::array<bool, 5> flags{};
};

struct TableCell {
  bool implied = false;   // marked as an implication in the printed table
  bool diagonal = false;  // i => i holds trivially
  std::vector<std::string> witnesses;   // instances with i true and j false
  bool ok() const { return diagonal || (implied ? witnesses.empty() : !witnesses.empty()); }
};

struct ImplicationTable {
  std::array<std::array<TableCell, 5>, 5> cells;
  bool consistent() const;
};

/// Whether the printed table marks (i) => (j).
bool table_implies(std::size_t i, std::size_t j);
ImplicationTable implication_table(const std::vector<TableInstance>& instances);
std::string render_table(const ImplicationTable& t);

/// For local Manis v: I_v < 1 holds iff v is compatible.
Findings iv_prec_one(const ValuationPtr& v, const QuasiOrderPtr& q, const std::vector<Element>& pool,
                     const Sweep& sweep);

/// Quot(R_v / I_v) equals the residue field of the fraction-field extension:
/// every sampled f with nu(f) >= 0 has the residue of some r1/r2 with
/// r1 in R_v and r2 in U_v. Witness: f.
Finding special_star_check(const ValuationPtr& v, const std::vector<Element>& pool, const Sweep& sweep);

struct RankReport {
  std::size_t rank = 0;
  std::vector<std::string> chain;  // coarsest first
  Findings findings;
};
/// Compatible candidates up to equivalence, ordered by coarsening.
RankReport rank(const QuasiOrderPtr& q, const std::vector<ValuationPtr>& candidates, const std::vector<Element>& pool,
                const Sweep& sweep);

struct QoField {
  QuasiOrderPtr order;
  Findings findings;
};
/// Fraction field of R/E_0 with the extended quasi-order. When v is given and
/// its support equals E_0, compatibility is compared at R, R/E_0 and the field.
QoField associated_qofield(const QuasiOrderPtr& q, const ValuationPtr& v, const std::vector<Element>& pool,
                           const Sweep& sweep);

}  // namespace qord
