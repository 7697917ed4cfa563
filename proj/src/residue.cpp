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

#include "qord/residue.hpp"

#include <algorithm>
#include <sstream>

namespace qord {

namespace {

constexpr std::size_t kPerturbations = 8;

void require_same_ring(const Valuation& v, const QuasiOrder& q) {
  if (!same_ring(v.ring, q.ring))
    throw RingMismatch("valuation on " + v.ring->describe() + " and quasi-order on " + q.ring->describe());
}

bool residue_rule(const QuasiOrder& q, const Valuation& v, const Element& x, const Element& y) {
  return v(x - y).sign() > 0 || q.le(x, y);
}

std::string flag_string(const std::array<bool, 5>& flags) {
  std::string s;
  for (std::size_t i = 0; i < flags.size(); ++i) {
    if (i) s += ' ';
    s += "(" + std::to_string(i + 1) + ")=" + (flags[i] ? "T" : "F");
  }
  return s;
}

Finding skipped(std::string name, std::string why) {
  return Finding{std::move(name), Status::pass, {}, "skipped: " + std::move(why), 0};
}

/// Residue-domain elements built from R_v samples.
std::vector<Element> residue_pool(const Valuation& v, const std::vector<Element>& pool) {
  std::vector<Element> out;
  for (const auto& x : ring_samples(v, pool)) {
    try {
      merge_unique(out, {v.residue->reduce(x)});
    } catch (const std::exception&) {
    }
  }
  return out;
}

/// Image in the fraction field of R/supp(v).
Element to_field(const Valuation& v, const RingPtr& field, const Element& x) {
  return coerce(quotient_reduce(x, v.support), field);
}

}  // namespace

Finding is_convex(const std::string& name, const std::function<bool(const Element&)>& member, const QuasiOrder& q,
                  const std::vector<Element>& pool, const Sweep& sweep) {
  const Element zero = q.ring->zero();
  if (!member(zero)) throw PreconditionError(name + ": 0 is not in the set");
  for (const auto& x : pool)
    if (member(x) != member(-x)) throw PreconditionError(name + ": the set is not closed under negation at " + x.to_string());
  Finding f = sweep_pairs(name, sweep, pool, [&](const Element& z, const Element& y) {
    return member(z) && q.le(zero, y) && q.le(y, z) && !member(y);
  });
  if (!f.ok() && f.witness.size() == 2) {
    if (f.detail.empty()) f.detail = "0 <= " + f.witness[1].to_string() + " <= " + f.witness[0].to_string();
    f.witness = {f.witness[1]};
  }
  return f;
}

Finding is_compatible(const Valuation& v, const QuasiOrder& q, const std::vector<Element>& pool, const Sweep& sweep) {
  require_same_ring(v, q);
  const Element zero = q.ring->zero();
  Finding f = sweep_pairs("compatible", sweep, pool, [&](const Element& y, const Element& z) {
    return q.le(zero, y) && q.le(y, z) && !(v(z) <= v(y));
  });
  if (!f.ok() && f.detail.empty())
    f.detail = "v(" + f.witness[0].to_string() + ") = " + v(f.witness[0]).to_string() + " < " +
               v(f.witness[1]).to_string() + " = v(" + f.witness[1].to_string() + ")";
  return f;
}

Finding iv_below_one(const Valuation& v, const QuasiOrder& q, const std::vector<Element>& pool, const Sweep& sweep) {
  require_same_ring(v, q);
  const Element one = q.ring->one();
  Finding f = sweep_singles("I_v below 1", sweep, pool, [&](const Element& c) { return v.in_ideal(c) && !q.strict(c, one); });
  if (!f.ok() && f.detail.empty()) f.detail = f.witness[0].to_string() + " in I_v is not below 1";
  return f;
}

std::vector<Element> condition_pool(const Valuation& v, const std::vector<Element>& pool) {
  std::vector<Element> out = pool;
  merge_unique(out, ring_samples(v, pool));
  merge_unique(out, ideal_samples(v, pool));
  return out;
}

QuasiOrderPtr residue_rule_qo(const QuasiOrderPtr& q, const ValuationPtr& v) {
  require_same_ring(*v, *q);
  auto out = std::make_shared<QuasiOrder>();
  out->name = "res(" + q->name + ", " + v->name + ")";
  out->provenance = "residue-induced";
  out->ring = v->ring;
  out->le_fn = [q, v](const Element& x, const Element& y) { return residue_rule(*q, *v, x, y); };
  out->declared = q->declared;
  out->is_zero = [v](const Element& x) { return v->in_ideal(x); };
  out->carrier = [v](const std::vector<Element>& pool) { return ring_samples(*v, pool); };
  for (const auto& d : q->distinguished)
    if (v->in_ring(d)) out->distinguished.push_back(d);
  return out;
}

QuasiOrderPtr residue_qo(const QuasiOrderPtr& q, const ValuationPtr& v) {
  QuasiOrderPtr rule = residue_rule_qo(q, v);
  if (!v->residue) return rule;
  const ResidueMap& res = *v->residue;
  auto out = std::make_shared<QuasiOrder>();
  out->name = rule->name;
  out->provenance = "residue-induced";
  out->ring = res.target;
  auto lift = res.lift;
  out->le_fn = [q, v, lift](const Element& a, const Element& b) { return residue_rule(*q, *v, lift(a), lift(b)); };
  out->declared = q->declared;
  out->support = Ideal::zero();
  out->carrier = [v](const std::vector<Element>& pool) {
    // Pools of the parent ring are mapped down; pools of the target pass through.
    if (!pool.empty() && same_ring(pool.front().ring(), v->residue->target)) return pool;
    return residue_pool(*v, pool);
  };
  for (const auto& d : rule->distinguished) {
    try {
      merge_unique(out->distinguished, {res.reduce(d)});
    } catch (const std::exception&) {
    }
  }
  return out;
}

Finding representative_invariance(const QuasiOrder& q, const Valuation& v, const std::vector<Element>& pool,
                                  const Sweep& sweep) {
  require_same_ring(v, q);
  std::vector<Element> reps, shifts;
  for (const auto& x : pool) {
    Value val = v(x);
    if (val.sign() >= 0) reps.push_back(x);
    if (val.sign() > 0 && !x.is_zero() && shifts.size() < kPerturbations) shifts.push_back(x);
  }
  Element culprit = q.ring->zero();
  Finding f = sweep_pairs("representative-invariance", sweep, reps, [&](const Element& x, const Element& y) {
    std::vector<Element> cs = shifts;
    if (v.in_ideal(x)) cs.push_back(-x);
    if (v.in_ideal(y)) cs.push_back(-y);
    const bool base = residue_rule(q, v, x, y);
    for (const auto& c : cs) {
      if (residue_rule(q, v, x + c, y) != base || residue_rule(q, v, x, y + c) != base) {
        culprit = c;
        return true;
      }
    }
    return false;
  });
  if (!f.ok() && f.witness.size() == 2) {
    f.witness.push_back(culprit);
    if (f.detail.empty()) f.detail = "shifting a representative by " + culprit.to_string() + " flips the verdict";
  }
  return f;
}

CompatReport conditions(const QuasiOrderPtr& q, const ValuationPtr& v, const std::vector<Element>& pool,
                        const Sweep& sweep) {
  require_same_ring(*v, *q);
  CompatReport r;
  r.seed = sweep.seed;
  const std::vector<Element> p = condition_pool(*v, pool);
  r.evidence[0] = is_compatible(*v, *q, p, sweep);
  r.evidence[1] = is_convex("R_v convex", [&](const Element& x) { return v->in_ring(x); }, *q, p, sweep);
  r.evidence[2] = is_convex("I_v convex", [&](const Element& x) { return v->in_ideal(x); }, *q, p, sweep);
  r.evidence[3] = iv_below_one(*v, *q, p, sweep);
  {
    Finding inv = representative_invariance(*q, *v, p, sweep);
    Findings ax = check_qo_axioms(*residue_rule_qo(q, v), p, sweep);
    Finding f{"residue quasi-order", Status::pass, {}, "", inv.samples_used + ax.samples_used()};
    if (!inv.ok()) {
      f.status = inv.status;
      f.witness = inv.witness;
      f.detail = inv.name + ": " + inv.detail;
    } else if (const Finding* bad = ax.first_problem()) {
      f.status = bad->status;
      f.witness = bad->witness;
      f.detail = bad->name + (bad->detail.empty() ? "" : ": " + bad->detail);
    }
    r.evidence[4] = f;
  }
  for (std::size_t i = 0; i < 5; ++i) {
    r.flags[i] = r.evidence[i].ok();
    r.samples_used += r.evidence[i].samples_used;
  }
  return r;
}

TheoremReport theorem_report(const QuasiOrderPtr& q, const ValuationPtr& v, const std::vector<Element>& pool,
                             const Sweep& sweep) {
  if (!v->manis) throw PreconditionError("theorem report: " + v->name + " is not Manis");
  TheoremReport t;
  t.conditions = conditions(q, v, pool, sweep);
  t.nontrivial = v->nontrivial();
  const auto& fl = t.conditions.flags;
  const bool compat = fl[0], iv_convex = fl[2], rule = fl[4], rv_convex = fl[1];
  {
    Finding f{"equivalence", Status::pass, {}, flag_string(fl), t.conditions.samples_used};
    bool ok = compat == iv_convex && compat == rule;
    if (t.nontrivial && rv_convex != compat) ok = false;
    if (compat && !rv_convex) ok = false;
    if (!ok) f.status = Status::hard_inconsistency;
    t.findings.add(f);
  }
  if (compat) {
    Finding f = t.conditions.evidence[3];
    f.name = "I_v below 1 when compatible";
    if (!f.ok()) f.status = Status::hard_inconsistency;
    t.findings.add(f);
  } else {
    t.findings.add(skipped("I_v below 1 when compatible", "not compatible"));
  }
  const std::vector<Element> p = condition_pool(*v, pool);
  if (iv_convex) {
    std::vector<Element> units, ideal;
    for (const auto& x : p) {
      if (v->in_units(x)) units.push_back(x);
      else if (v->in_ideal(x)) ideal.push_back(x);
    }
    std::vector<Element> mixed = units;
    mixed.insert(mixed.end(), ideal.begin(), ideal.end());
    const Element zero = q->ring->zero();
    Finding f = sweep_pairs("unit-sign-stability", sweep, mixed, [&](const Element& u, const Element& c) {
      if (!v->in_units(u) || !v->in_ideal(c)) return false;
      if (q->sim(c, u)) return true;
      if (q->strict(zero, u) && !q->strict(zero, u + c)) return true;
      return q->strict(u, zero) && !q->strict(u + c, zero);
    });
    if (!f.ok()) f.status = Status::hard_inconsistency;
    t.findings.add(f);
  } else {
    t.findings.add(skipped("unit-sign-stability", "I_v not convex"));
  }
  if (compat) {
    QuasiOrderPtr rq = residue_qo(q, v);
    Finding f{"class-preserved", Status::pass, {}, "", 2};
    try {
      QoClass a = classify_qo(*q), b = classify_qo(*rq);
      f.detail = to_string(a) + " / " + to_string(b);
      if (a != b) f.status = Status::hard_inconsistency;
    } catch (const std::domain_error& e) {
      f.status = Status::hard_inconsistency;
      f.detail = e.what();
    }
    t.findings.add(f);
    if (q->valuation && v->residue) {
      try {
        QuasiOrderPtr qwv = from_valuation(quotient_val(q->valuation, v));
        Finding g = agreement("residue-valuation", *rq, *qwv, residue_pool(*v, p), sweep);
        if (!g.ok()) g.status = Status::hard_inconsistency;
        t.findings.add(g);
      } catch (const std::exception& e) {
        t.findings.add(Finding{"residue-valuation", Status::hard_inconsistency, {}, e.what(), 0});
      }
    } else {
      t.findings.add(skipped("residue-valuation", "needs a valuation-induced quasi-order and a residue map"));
    }
  } else {
    t.findings.add(skipped("class-preserved", "not compatible"));
    t.findings.add(skipped("residue-valuation", "not compatible"));
  }
  return t;
}

bool table_implies(std::size_t i, std::size_t j) {
  static const std::pair<std::size_t, std::size_t> marked[] = {{0, 1}, {0, 2}, {0, 3}, {0, 4},
                                                               {2, 3}, {2, 4}, {4, 3}};
  for (const auto& [a, b] : marked)
    if (a == i && b == j) return true;
  return false;
}

bool ImplicationTable::consistent() const {
  for (const auto& row : cells)
    for (const auto& c : row)
      if (!c.ok()) return false;
  return true;
}

ImplicationTable implication_table(const std::vector<TableInstance>& instances) {
  ImplicationTable t;
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = 0; j < 5; ++j) {
      TableCell& c = t.cells[i][j];
      c.diagonal = i == j;
      c.implied = table_implies(i, j);
      if (c.diagonal) continue;
      for (const auto& inst : instances)
        if (inst.flags[i] && !inst.flags[j]) c.witnesses.push_back(inst.name);
    }
  return t;
}

std::string render_table(const ImplicationTable& t) {
  std::ostringstream os;
  os << "=>  ";
  for (std::size_t j = 0; j < 5; ++j) os << "  (" << j + 1 << ")";
  os << "\n";
  for (std::size_t i = 0; i < 5; ++i) {
    os << "(" << i + 1 << ")";
    for (std::size_t j = 0; j < 5; ++j) {
      const TableCell& c = t.cells[i][j];
      const char* mark = c.diagonal ? "=" : c.implied ? (c.ok() ? "yes" : "BAD") : (c.ok() ? "no" : "??");
      std::string cell = mark;
      os << std::string(5 - cell.size(), ' ') << cell;
    }
    os << "\n";
  }
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = 0; j < 5; ++j) {
      const TableCell& c = t.cells[i][j];
      if (c.diagonal) continue;
      os << "(" << i + 1 << ") => (" << j + 1 << "): ";
      if (c.implied) {
        os << (c.witnesses.empty() ? "implied, no violations" : "implied, VIOLATED by");
      } else {
        os << (c.witnesses.empty() ? "not implied, MISSING witness" : "not implied, witnesses");
      }
      for (std::size_t k = 0; k < c.witnesses.size(); ++k) os << (k ? ", " : " ") << c.witnesses[k];
      os << "\n";
    }
  os << "table " << (t.consistent() ? "consistent" : "INCONSISTENT") << "\n";
  return os.str();
}

Findings iv_prec_one(const ValuationPtr& v, const QuasiOrderPtr& q, const std::vector<Element>& pool,
                     const Sweep& sweep) {
  if (!v->local) throw PreconditionError("I_v < 1 test: " + v->name + " is not local");
  if (!v->manis) throw PreconditionError("I_v < 1 test: " + v->name + " is not Manis");
  const std::vector<Element> p = condition_pool(*v, pool);
  Findings out;
  Finding below = iv_below_one(*v, *q, p, sweep);
  Finding compat = is_compatible(*v, *q, p, sweep);
  Finding eq{"local-equivalence", Status::pass, {}, "", below.samples_used + compat.samples_used};
  eq.detail = std::string("I_v < 1: ") + (below.ok() ? "true" : "false") + ", compatible: " + (compat.ok() ? "true" : "false");
  if (below.ok() != compat.ok()) eq.status = Status::hard_inconsistency;
  out.add(below);
  out.add(compat);
  out.add(eq);
  return out;
}

Finding special_star_check(const ValuationPtr& v, const std::vector<Element>& pool, const Sweep& sweep) {
  ValuationPtr nu = frac_extend_val(v);
  const RingPtr field = nu->ring;
  const Valuation& V = *v;
  std::vector<Element> units, reps;
  for (const auto& x : ring_samples(V, pool)) {
    if (V.in_units(x) && units.size() < 32) units.push_back(x);
    if (reps.size() < 64) reps.push_back(x);
  }
  auto fraction = [&](const Element& a, const Element& b) { return divide(to_field(V, field, a), to_field(V, field, b)); };
  auto represents = [&](const Element& f, const Element& r1, const Element& r2) {
    return V.in_ring(r1) && V.in_units(r2) && (*nu)(f - fraction(r1, r2)).sign() > 0;
  };
  // Residue agreement: the residue of f equals the residue of r1 / r2.
  auto residues_agree = [&](const Element& f, const Element& r1, const Element& r2) {
    if (!V.residue || !nu->residue) return true;
    Element a = V.residue->reduce(r1), b = V.residue->reduce(r2);
    Element rf = nu->residue->reduce(f);
    RingPtr t = nu->residue->target;
    return coerce(a, t) == rf * coerce(b, t);
  };

  Finding f{"special*", Status::pass, {}, "", 0};
  std::size_t searched = 0;
  bool inconclusive = false;
  Element open = field->zero();
  f.samples_used = sweep.pairs(pool, [&](const Element& x, const Element& y) {
    try {
      if (V(y).is_infinite()) return false;
      Element q = fraction(x, y);
      if ((*nu)(q).sign() < 0) return false;
      std::optional<std::pair<Element, Element>> found;
      if (V.manis) {
        Element a = coerce(V.preimage(-V(y)), V.ring);
        if (represents(q, x * a, y * a)) found = std::make_pair(x * a, y * a);
      } else {
        if (nu->residue) {
          Element r = nu->residue->reduce(q);
          if (r.is_constant()) {
            Rational c = r.as_rational();
            Element r1 = V.ring->from_integer(c.get_num()), r2 = V.ring->from_integer(c.get_den());
            if (represents(q, r1, r2)) found = std::make_pair(r1, r2);
          }
        }
        for (std::size_t i = 0; !found && i < units.size(); ++i)
          for (std::size_t j = 0; !found && j < reps.size(); ++j) {
            ++searched;
            if (represents(q, reps[j], units[i])) found = std::make_pair(reps[j], units[i]);
          }
      }
      if (!found) {
        if (V.manis) {
          f.status = Status::fail;
          f.witness = {q};
          f.detail = "no representation through the preimage";
          return true;
        }
        if (!inconclusive) open = q;
        inconclusive = true;
        return false;
      }
      if (!residues_agree(q, found->first, found->second)) {
        f.status = Status::fail;
        f.witness = {q, found->first, found->second};
        f.detail = "residues differ";
        return true;
      }
    } catch (const std::exception& e) {
      f.status = Status::fail;
      f.witness = {x, y};
      f.detail = std::string("error: ") + e.what();
      return true;
    }
    return false;
  });
  if (f.ok() && inconclusive) {
    f.status = Status::inconclusive;
    f.witness = {open};
    f.detail = "bounded search exhausted after " + std::to_string(searched) + " candidates";
  }
  return f;
}

RankReport rank(const QuasiOrderPtr& q, const std::vector<ValuationPtr>& candidates, const std::vector<Element>& pool,
                const Sweep& sweep) {
  if (!q->ring->is_field() || q->support.kind != Ideal::Kind::zero || q->is_zero)
    throw PreconditionError("rank: " + q->name + " is not a quasi-ordered field");
  for (const auto& c : candidates) {
    if (!c->nontrivial()) throw PreconditionError("rank: candidate " + c->name + " is trivial");
    require_same_ring(*c, *q);
  }
  RankReport r;
  std::vector<ValuationPtr> survivors;
  for (const auto& c : candidates) {
    std::vector<Element> p = pool;
    merge_unique(p, c->distinguished);
    merge_unique(p, q->distinguished);
    Finding f = is_compatible(*c, *q, condition_pool(*c, p), sweep);
    f.name = "compatible(" + c->name + ")";
    if (f.ok()) survivors.push_back(c);
    f.status = Status::pass;  // an incompatible candidate is a result, not a failure
    if (f.witness.empty()) f.detail = "compatible";
    r.findings.add(f);
  }
  std::vector<ValuationPtr> kept;
  for (const auto& s : survivors) {
    bool dup = false;
    for (const auto& k : kept) {
      Finding e = equivalent_check(*k, *s, pool, sweep);
      if (e.ok()) {
        dup = true;
        r.findings.add(Finding{"equivalent(" + k->name + ", " + s->name + ")", Status::pass, {}, "dropped " + s->name,
                               e.samples_used});
        break;
      }
    }
    if (!dup) kept.push_back(s);
  }
  const std::size_t n = kept.size();
  std::vector<std::vector<bool>> coarser(n, std::vector<bool>(n, true));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) coarser[i][j] = coarsening_check(*kept[i], *kept[j], pool, sweep).coarsening;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Finding f{"chain(" + kept[i]->name + ", " + kept[j]->name + ")", Status::pass, {}, "", 2};
      if (!coarser[i][j] && !coarser[j][i]) {
        f.status = Status::hard_inconsistency;
        f.detail = "neither is a coarsening of the other";
      }
      r.findings.add(f);
    }
  std::vector<std::size_t> idx(n);
  for (std::size_t i = 0; i < n; ++i) idx[i] = i;
  std::stable_sort(idx.begin(), idx.end(),
                   [&](std::size_t a, std::size_t b) { return coarser[a][b] && !coarser[b][a]; });
  for (auto i : idx) r.chain.push_back(kept[i]->name);
  r.rank = n;
  return r;
}

QoField associated_qofield(const QuasiOrderPtr& q, const ValuationPtr& v, const std::vector<Element>& pool,
                           const Sweep& sweep) {
  const std::vector<Element> cp = carrier_pool(*q, pool);
  const Element zero = q->ring->zero();
  Finding prime = sweep_pairs("support-prime", sweep, cp, [&](const Element& x, const Element& y) {
    return q->sim(x * y, zero) && !q->sim(x, zero) && !q->sim(y, zero);
  });
  if (!prime.ok())
    throw PreconditionError("associated field: the support of " + q->name + " is not prime at " +
                            format_witness(prime.witness));
  QoField out;
  out.findings.add(prime);
  out.order = frac_extend_qo(q);
  if (!v) return out;
  require_same_ring(*v, *q);
  Finding same = sweep_singles("support-match", sweep, cp,
                               [&](const Element& x) { return v->operator()(x).is_infinite() != q->sim(x, zero); });
  out.findings.add(same);
  if (!same.ok()) return out;

  const RingPtr domain = Ring::quotient(q->ring, q->support);
  const RingPtr field = out.order->ring;
  const RingPtr base = q->ring;
  // Level R/E_0: both structures pulled back along the representative map.
  auto vd = std::make_shared<Valuation>(*v);
  vd->ring = domain;
  vd->eval_fn = [v, base](const Element& x) { return (*v)(representative(x, base)); };
  vd->support = Ideal::zero();
  vd->residue.reset();
  vd->distinguished.clear();
  QuasiOrderPtr qd = restrict_qo(
      q, domain, [base](const Element& x) { return representative(x, base); }, Ideal::zero(), q->name + " on R/E_0");
  ValuationPtr nu = frac_extend_val(v);

  std::vector<Element> dpool, fpool;
  for (const auto& x : pool) {
    Element d = quotient_reduce(x, q->support);
    merge_unique(dpool, {d});
    merge_unique(fpool, {coerce(d, field)});
  }
  for (std::size_t i = 0; i + 1 < dpool.size() && i < 200; ++i)
    if (!dpool[i + 1].is_zero()) merge_unique(fpool, {divide(coerce(dpool[i], field), coerce(dpool[i + 1], field))});

  Finding a = is_compatible(*v, *q, condition_pool(*v, pool), sweep);
  Finding b = is_compatible(*vd, *qd, dpool, sweep);
  Finding c = is_compatible(*nu, *out.order, condition_pool(*nu, fpool), sweep);
  a.name = "compatible at R";
  b.name = "compatible at R/E_0";
  c.name = "compatible at the field";
  Finding agree{"compatibility-levels", Status::pass, {}, "", a.samples_used + b.samples_used + c.samples_used};
  agree.detail = std::string(a.ok() ? "T" : "F") + " " + (b.ok() ? "T" : "F") + " " + (c.ok() ? "T" : "F");
  if (a.ok() != b.ok() || b.ok() != c.ok()) agree.status = Status::hard_inconsistency;
  for (auto* f : {&a, &b, &c}) {
    // Incompatibility at every level is a consistent answer.
    if (!f->ok()) f->detail = "incompatible: " + f->detail, f->status = Status::pass;
    out.findings.add(*f);
  }
  out.findings.add(agree);
  return out;
}

}  // namespace qord
