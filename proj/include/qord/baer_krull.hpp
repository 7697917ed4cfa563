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
 * @file baer_krull.hpp
 * Lifting a sign vector and a residue quasi-order along a Manis valuation
 * to a compatible quasi-order, the inverse map psi, and the checks that the
 * two are mutually inverse on the admissible set.
 */

#pragma once

#include <string>
#include <vector>

#include "qord/residue.hpp"

namespace qord {

/// Elements pi_i with v(pi_i) equal to the i-th basis element of Gamma_v.
struct BasisData {
  ValuationPtr valuation;
  std::vector<Element> pis;
};

/// Deterministic basis: pi_i = preimage of the i-th basis value. Throws
/// PreconditionError unless v is Manis.
BasisData basis_data(const ValuationPtr& v);
/// Checks v(pi_i) = gamma_i exactly; throws std::invalid_argument otherwise.
BasisData basis_data(const ValuationPtr& v, std::vector<Element> pis);

using EtaVector = std::vector<int>;
std::string to_string(const EtaVector& eta);

/// Sign vector and residue quasi-order. A proper residue quasi-order only
/// admits the constant sign vector +1.
struct LiftData {
  BasisData basis;
  EtaVector eta;
  QuasiOrderPtr residue_qo;
};

/// Validates sizes, signs, the residue ring and admissibility; throws
/// PreconditionError on violation.
LiftData lift_data(BasisData basis, EtaVector eta, QuasiOrderPtr residue_qo);

/// gamma = max(-v(x), -v(y)) = sum_{i in I} gamma_i + 2 delta, a = preimage(delta),
/// m = prod_{i in I} pi_i * a^2.
struct GammaData {
  Value gamma;
  Mod2Decomposition decomposition;
  Element a;
  Element m;
};
/// Throws std::invalid_argument when both arguments lie in the support.
GammaData gamma_data(const BasisData& basis, const Element& x, const Element& y);

/// The lifted quasi-order; its support is supp(v). Proper residue
/// quasi-orders use the displayed comparison of x*m and y*m. Orders compare
/// 0 with y - x instead, so leading terms that cancel are still ordered.
QuasiOrderPtr lift(const LiftData& data);
/// The displayed comparison for every residue quasi-order. For orders it
/// violates QR4 when the leading terms of x and y cancel.
QuasiOrderPtr lift_displayed(const LiftData& data);

/// eta(i) = +1 iff 0 <= pi_i; throws PreconditionError if pi_i ~ 0.
EtaVector extract_eta(const QuasiOrder& q, const BasisData& basis);

struct PsiResult {
  EtaVector eta;
  QuasiOrderPtr residue_qo;
  bool admissible = false;
};
/// (eta_q, q'); throws PreconditionError unless q is v-compatible with
/// support supp(v) on the samples.
PsiResult psi(const QuasiOrderPtr& q, const BasisData& basis, const std::vector<Element>& pool, const Sweep& sweep);

/// Sample pool of the residue target of v built from a ring pool.
std::vector<Element> residue_samples(const Valuation& v, const std::vector<Element>& pool);

/// psi(lift(data)) = data: the sign vector exactly, the residue quasi-order on
/// sampled residue pairs.
Findings roundtrip_check(const LiftData& data, const std::vector<Element>& pool, const Sweep& sweep);
/// lift(psi(q)) agrees with q on sampled pairs; inconclusive off the admissible set.
Findings reconstruct_check(const QuasiOrderPtr& q, const BasisData& basis, const std::vector<Element>& pool,
                           const Sweep& sweep);

/// Axioms, support, compatibility, independence of the choice of a, the
/// unit shortcut and the residue lemma for the lifted quasi-order. For
/// orders the unit shortcut is checked as: x <= y implies res(x) <= res(y),
/// and res(x) < res(y) implies x < y.
Findings lift_properties(const LiftData& data, const std::vector<Element>& pool, const Sweep& sweep);

/// Two admissible lift data that differ give comparators that differ on a
/// sampled pair. Witness: the pair.
Finding injectivity_check(const LiftData& a, const LiftData& b, const std::vector<Element>& pool, const Sweep& sweep);

/// Lift at the fraction-field level of R/supp(v) and restrict to R.
struct RingLift {
  QuasiOrderPtr order;
  QuasiOrderPtr field_order;
  Findings findings;
};
RingLift bk3_lift(const ValuationPtr& v, const EtaVector& eta, const QuasiOrderPtr& field_residue_qo,
                  const std::vector<Element>& pool, const Sweep& sweep);

/// Restriction of a quasi-order on the residue field of the fraction-field
/// extension to the residue domain of v. Requires v to pass special_star_check.
QuasiOrderPtr mu_restrict(const QuasiOrderPtr& field_residue_qo, const ValuationPtr& v, const std::vector<Element>& pool,
                          const Sweep& sweep);

/// For a refinement w of v: w is Manis iff w/v is Manis.
Finding manis_transfer_check(const ValuationPtr& w, const ValuationPtr& v);

}  // namespace qord
