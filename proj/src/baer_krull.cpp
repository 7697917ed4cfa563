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

#include "qord/baer_krull.hpp"

#include <algorithm>

namespace qord {

namespace {

constexpr std::size_t kUnitShifts = 8;

const Valuation& val(const BasisData& b) {
  return *b.valuation;
}

bool lift_verdict(const LiftData& d, const Element& x, const Element& y, const Element& m, int sign) {
  const ResidueMap& res = *val(d.basis).residue;
  Element rx = res.reduce(x * m), ry = res.reduce(y * m);
  return sign > 0 ? d.residue_qo->le(rx, ry) : d.residue_qo->le(ry, rx);
}

int eta_product(const EtaVector& eta, const std::vector<std::size_t>& index_set) {
  int s = 1;
  for (auto i : index_set) s *= eta[i];
  return s;
}

/// Pool extended by the basis elements and the valuation's distinguished elements.
std::vector<Element> lift_pool(const BasisData& b, const std::vector<Element>& pool) {
  std::vector<Element> out = pool;
  merge_unique(out, b.pis);
  for (const auto& d : val(b).distinguished)
    if (same_ring(d.ring(), val(b).ring)) merge_unique(out, {d});
  return out;
}

std::vector<Element> field_pool(const std::vector<Element>& pool, const std::function<Element(const Element&)>& map) {
  std::vector<Element> out;
  for (const auto& x : pool) merge_unique(out, {map(x)});
  const std::size_t n = std::min<std::size_t>(out.size(), 200);
  for (std::size_t i = 0; i + 1 < n; ++i)
    if (!out[i + 1].is_zero()) merge_unique(out, {divide(out[i], out[i + 1])});
  return out;
}

}  // namespace

std::string to_string(const EtaVector& eta) {
  std::string s = "(";
  for (std::size_t i = 0; i < eta.size(); ++i) s += (i ? ", " : "") + std::string(eta[i] > 0 ? "+1" : "-1");
  return s + ")";
}

BasisData basis_data(const ValuationPtr& v) {
  if (!v->manis) throw PreconditionError("basis: " + v->name + " is not Manis");
  std::vector<Element> pis;
  for (const auto& g : v->group.basis()) pis.push_back(coerce(v->preimage(g), v->ring));
  return basis_data(v, std::move(pis));
}

BasisData basis_data(const ValuationPtr& v, std::vector<Element> pis) {
  const auto& basis = v->group.basis();
  if (pis.size() != basis.size())
    throw std::invalid_argument("basis: expected " + std::to_string(basis.size()) + " elements, got " +
                                std::to_string(pis.size()));
  for (std::size_t i = 0; i < pis.size(); ++i) {
    Value got = (*v)(pis[i]);
    if (got != basis[i])
      throw std::invalid_argument("basis: v(" + pis[i].to_string() + ") = " + got.to_string() + ", expected " +
                                  basis[i].to_string());
  }
  return BasisData{v, std::move(pis)};
}

LiftData lift_data(BasisData basis, EtaVector eta, QuasiOrderPtr residue_qo) {
  const Valuation& v = val(basis);
  if (!v.manis) throw PreconditionError("lift: " + v.name + " is not Manis");
  if (!v.residue) throw PreconditionError("lift: " + v.name + " has no residue map");
  if (eta.size() != basis.pis.size())
    throw PreconditionError("lift: sign vector has " + std::to_string(eta.size()) + " entries for a basis of " +
                            std::to_string(basis.pis.size()));
  for (int e : eta)
    if (e != 1 && e != -1) throw PreconditionError("lift: sign vector entries must be +1 or -1");
  if (!same_ring(residue_qo->ring, v.residue->target))
    throw PreconditionError("lift: residue quasi-order lives on " + residue_qo->ring->describe() + ", expected " +
                            v.residue->target->describe());
  QoClass c;
  try {
    c = classify_qo(*residue_qo);
  } catch (const std::domain_error& e) {
    throw PreconditionError(std::string("lift: residue quasi-order: ") + e.what());
  }
  if (c == QoClass::proper && std::any_of(eta.begin(), eta.end(), [](int e) { return e < 0; }))
    throw PreconditionError("lift: a proper residue quasi-order admits only the sign vector +1, got " + to_string(eta));
  return LiftData{std::move(basis), std::move(eta), std::move(residue_qo)};
}

GammaData gamma_data(const BasisData& basis, const Element& x, const Element& y) {
  const Valuation& v = val(basis);
  Value vx = v(x), vy = v(y);
  if (vx.is_infinite() && vy.is_infinite()) throw std::invalid_argument("gamma: both arguments lie in the support");
  Value gamma = vx.is_infinite() ? -vy : vy.is_infinite() ? -vx : max_value(-vx, -vy);
  Mod2Decomposition dec = v.group.mod2_decompose(gamma);
  Element a = coerce(v.preimage(dec.delta), v.ring);
  Element m = a * a;
  for (auto i : dec.index_set) m = m * basis.pis[i];
  return GammaData{gamma, dec, a, m};
}

namespace {

bool displayed_le(const LiftData& data, const Element& x, const Element& y) {
  const Valuation& v = val(data.basis);
  if (v(x).is_infinite() && v(y).is_infinite()) return true;
  GammaData g = gamma_data(data.basis, x, y);
  return lift_verdict(data, x, y, g.m, eta_product(data.eta, g.decomposition.index_set));
}

QuasiOrderPtr make_lift(const LiftData& data, bool displayed) {
  const Valuation& v = val(data.basis);
  const QoClass c = classify_qo(*data.residue_qo);
  auto q = std::make_shared<QuasiOrder>();
  q->name = std::string(displayed ? "displayed-" : "") + "lift(" + v.name + ", " + to_string(data.eta) + ", " +
            data.residue_qo->name + ")";
  q->provenance = "lifted";
  q->ring = v.ring;
  if (displayed || c == QoClass::proper) {
    q->le_fn = [data](const Element& x, const Element& y) { return displayed_le(data, x, y); };
  } else {
    q->le_fn = [data](const Element& x, const Element& y) {
      const Element zero = x.ring()->zero();
      return displayed_le(data, zero, y - x);
    };
  }
  q->declared = c;
  q->support = v.support;
  q->distinguished = lift_pool(data.basis, {});
  return q;
}

}  // namespace

QuasiOrderPtr lift(const LiftData& data) {
  return make_lift(data, false);
}

QuasiOrderPtr lift_displayed(const LiftData& data) {
  return make_lift(data, true);
}

EtaVector extract_eta(const QuasiOrder& q, const BasisData& basis) {
  EtaVector eta;
  const Element zero = q.ring->zero();
  for (const auto& p : basis.pis) {
    if (q.sim(p, zero)) throw PreconditionError("sign vector: " + p.to_string() + " lies in the support");
    eta.push_back(q.le(zero, p) ? 1 : -1);
  }
  return eta;
}

PsiResult psi(const QuasiOrderPtr& q, const BasisData& basis, const std::vector<Element>& pool, const Sweep& sweep) {
  const ValuationPtr& v = basis.valuation;
  const std::vector<Element> p = condition_pool(*v, lift_pool(basis, pool));
  Finding compat = is_compatible(*v, *q, p, sweep);
  if (!compat.ok())
    throw PreconditionError("psi: " + q->name + " is not compatible with " + v->name + " at " +
                            format_witness(compat.witness));
  const Element zero = q->ring->zero();
  Finding supp = sweep_singles("support", sweep, p, [&](const Element& x) {
    return (*v)(x).is_infinite() != q->sim(x, zero);
  });
  if (!supp.ok())
    throw PreconditionError("psi: supports of " + q->name + " and " + v->name + " differ at " +
                            format_witness(supp.witness));
  PsiResult r;
  r.eta = extract_eta(*q, basis);
  r.residue_qo = residue_qo(q, v);
  try {
    r.admissible = classify_qo(*r.residue_qo) == QoClass::order ||
                   std::all_of(r.eta.begin(), r.eta.end(), [](int e) { return e > 0; });
  } catch (const std::domain_error&) {
    r.admissible = false;
  }
  return r;
}

std::vector<Element> residue_samples(const Valuation& v, const std::vector<Element>& pool) {
  std::vector<Element> out;
  if (!v.residue) return out;
  for (const auto& x : ring_samples(v, pool)) {
    try {
      merge_unique(out, {v.residue->reduce(x)});
    } catch (const std::exception&) {
    }
  }
  return out;
}

Findings roundtrip_check(const LiftData& data, const std::vector<Element>& pool, const Sweep& sweep) {
  const ValuationPtr& v = data.basis.valuation;
  QuasiOrderPtr l = lift(data);
  Findings out;
  {
    Finding f{"roundtrip-eta", Status::pass, data.basis.pis, "", data.basis.pis.size()};
    try {
      EtaVector got = extract_eta(*l, data.basis);
      f.detail = "expected " + to_string(data.eta) + ", got " + to_string(got);
      if (got != data.eta) f.status = Status::fail;
      else f.witness.clear();
    } catch (const std::exception& e) {
      f.status = Status::fail;
      f.detail = std::string("error: ") + e.what();
    }
    out.add(f);
  }
  std::vector<Element> rpool = residue_samples(*v, lift_pool(data.basis, pool));
  merge_unique(rpool, data.residue_qo->distinguished);
  out.add(agreement("roundtrip-residue", *residue_qo(l, v), *data.residue_qo, rpool, sweep));
  return out;
}

Findings reconstruct_check(const QuasiOrderPtr& q, const BasisData& basis, const std::vector<Element>& pool,
                           const Sweep& sweep) {
  Findings out;
  PsiResult p = psi(q, basis, pool, sweep);
  Finding head{"psi", Status::pass, {}, "eta " + to_string(p.eta), 1};
  if (!p.admissible) {
    head.status = Status::inconclusive;
    head.detail += ", outside the admissible set";
    out.add(head);
    return out;
  }
  head.detail += ", residue " + to_string(classify_qo(*p.residue_qo));
  out.add(head);
  QuasiOrderPtr l = lift(lift_data(basis, p.eta, p.residue_qo));
  out.add(agreement("reconstruct", *l, *q, lift_pool(basis, pool), sweep));
  return out;
}

Findings lift_properties(const LiftData& data, const std::vector<Element>& pool, const Sweep& sweep) {
  const Valuation& v = val(data.basis);
  const ResidueMap& res = *v.residue;
  QuasiOrderPtr l = lift(data);
  const std::vector<Element> p = lift_pool(data.basis, pool);
  Findings out = check_qo_axioms(*l, p, sweep);
  out.add(is_compatible(v, *l, condition_pool(v, p), sweep));

  std::vector<Element> units;
  for (const auto& x : ring_samples(v, p))
    if (v.in_units(x) && !(x == v.ring->one()) && !(x == -v.ring->one()) && units.size() < kUnitShifts)
      units.push_back(x);
  Element culprit = v.ring->one();
  Finding choice = sweep_pairs("choice-of-a", sweep, p, [&](const Element& x, const Element& y) {
    if (v(x).is_infinite() && v(y).is_infinite()) return false;
    GammaData g = gamma_data(data.basis, x, y);
    const int s = eta_product(data.eta, g.decomposition.index_set);
    const bool base = lift_verdict(data, x, y, g.m, s);
    for (const auto& u : units) {
      if (lift_verdict(data, x, y, g.m * u * u, s) != base) {
        culprit = u;
        return true;
      }
    }
    return false;
  });
  if (!choice.ok() && choice.witness.size() == 2) choice.witness.push_back(culprit);
  out.add(choice);

  const bool proper = classify_qo(*data.residue_qo) == QoClass::proper;
  const QuasiOrder& rq = *data.residue_qo;
  out.add(sweep_pairs("unit-shortcut", sweep, p, [&](const Element& x, const Element& y) {
    if (!v.in_units(x) || !v.in_ring(y)) return false;
    Element rx = res.reduce(x), ry = res.reduce(y);
    if (proper) return l->le(x, y) != rq.le(rx, ry) || l->le(y, x) != rq.le(ry, rx);
    return (l->le(x, y) && !rq.le(rx, ry)) || (rq.strict(rx, ry) && !l->strict(x, y));
  }));

  out.add(sweep_pairs("residue-lemma", sweep, p, [&](const Element& x, const Element& y) {
    if (v(x).is_infinite() && v(y).is_infinite()) return false;
    GammaData g = gamma_data(data.basis, x, y);
    Element xm = x * g.m, ym = y * g.m;
    if (!v.in_ring(xm) || !v.in_ring(ym)) return true;
    return v.in_ideal(xm) != (v(x) > v(y));
  }));
  return out;
}

Finding injectivity_check(const LiftData& a, const LiftData& b, const std::vector<Element>& pool, const Sweep& sweep) {
  QuasiOrderPtr la = lift(a), lb = lift(b);
  Finding f = agreement("injectivity", *la, *lb, lift_pool(a.basis, pool), sweep);
  if (f.ok()) {
    f.status = Status::fail;
    f.detail = "no sampled pair separates the two lifts";
  } else if (f.detail.rfind("error:", 0) != 0) {
    f.status = Status::pass;
    f.detail = "separated by " + format_witness(f.witness);
  }
  return f;
}

RingLift bk3_lift(const ValuationPtr& v, const EtaVector& eta, const QuasiOrderPtr& field_residue_qo,
                  const std::vector<Element>& pool, const Sweep& sweep) {
  ValuationPtr nu = frac_extend_val(v);
  BasisData basis = basis_data(nu);
  RingLift out;
  out.field_order = lift(lift_data(basis, eta, field_residue_qo));
  const RingPtr field = nu->ring;
  const Ideal support = v->support;
  auto map = [support, field](const Element& x) { return coerce(quotient_reduce(x, support), field); };
  auto r = std::make_shared<QuasiOrder>(
      *restrict_qo(out.field_order, v->ring, map, support, "restrict(" + out.field_order->name + ")"));
  r->provenance = "lifted";
  out.order = r;

  Finding a = is_compatible(*v, *out.order, condition_pool(*v, pool), sweep);
  Finding b = is_compatible(*nu, *out.field_order, condition_pool(*nu, field_pool(pool, map)), sweep);
  a.name = "compatible on the ring";
  b.name = "compatible on the field";
  Finding agree{"compatibility-levels", Status::pass, {}, "", a.samples_used + b.samples_used};
  agree.detail = std::string(a.ok() ? "T" : "F") + " " + (b.ok() ? "T" : "F");
  if (a.ok() != b.ok()) agree.status = Status::hard_inconsistency;
  out.findings.add(a);
  out.findings.add(b);
  out.findings.add(agree);
  return out;
}

QuasiOrderPtr mu_restrict(const QuasiOrderPtr& field_residue_qo, const ValuationPtr& v, const std::vector<Element>& pool,
                          const Sweep& sweep) {
  if (!v->residue) throw PreconditionError("mu: " + v->name + " has no residue map");
  Finding star = special_star_check(v, pool, sweep);
  if (!star.ok()) throw PreconditionError("mu: " + v->name + " fails special*: " + star.detail);
  ValuationPtr nu = frac_extend_val(v);
  if (!nu->residue) throw PreconditionError("mu: " + nu->name + " has no residue map");
  if (!same_ring(field_residue_qo->ring, nu->residue->target))
    throw RingMismatch("mu: quasi-order on " + field_residue_qo->ring->describe() + ", residue field is " +
                       nu->residue->target->describe());
  const RingPtr field = nu->ring;
  const Ideal support = v->support;
  auto embed = [v, nu, field, support](const Element& r) {
    return nu->residue->reduce(coerce(quotient_reduce(v->residue->lift(r), support), field));
  };
  return restrict_qo(field_residue_qo, v->residue->target, embed, Ideal::zero(), "mu(" + field_residue_qo->name + ")");
}

Finding manis_transfer_check(const ValuationPtr& w, const ValuationPtr& v) {
  ValuationPtr q = quotient_val(w, v);
  Finding f{"manis-transfer", Status::pass, {}, "", 0};
  bool preimages = q->manis;
  if (q->manis) {
    for (std::size_t i = 0; i < q->group.rank() && preimages; ++i)
      for (long k : {-2L, -1L, 1L, 2L}) {
        Value g = scale(q->group.unit(i), k);
        ++f.samples_used;
        Element e = q->preimage(g);
        if ((*q)(e) != g) {
          preimages = false;
          f.witness = {e};
          break;
        }
      }
  }
  f.detail = std::string(w->name) + (w->manis ? " Manis" : " not Manis") + ", " + q->name +
             (preimages ? " Manis" : " not Manis");
  if (w->manis != preimages) f.status = Status::fail;
  return f;
}

}  // namespace qord
