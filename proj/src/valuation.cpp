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

#include "qord/valuation.hpp"

#include <algorithm>

namespace qord {

std::string to_string(Position p) {
  switch (p) {
    case Position::in_support:
      return "in-support";
    case Position::in_ideal:
      return "in-Iv";
    case Position::in_units:
      return "in-Uv";
    case Position::outside:
      return "outside-Rv";
  }
  return "?";
}

Value Valuation::operator()(const Element& x) const {
  if (!same_ring(x.ring(), ring))
    throw RingMismatch("element of " + x.ring()->describe() + " given to a valuation on " + ring->describe());
  return eval_fn(x);
}

Element Valuation::preimage(const Value& gamma) const {
  if (!manis || !preimage_fn) throw std::logic_error(name + " is not Manis; no preimage map");
  if (!group.contains(gamma) || gamma.is_infinite())
    throw GroupMismatch("value " + gamma.to_string() + " is not in " + group.describe());
  return preimage_fn(gamma);
}

Element Valuation::signed_witness(const Value& gamma) const {
  if (manis && preimage_fn) return preimage(gamma);
  if (!witness_fn) throw std::logic_error(name + " has no witness for value " + gamma.to_string());
  return witness_fn(gamma);
}

namespace {

long remove_prime(const Integer& n, const Integer& p) {
  if (n == 0) return 0;
  Integer m = abs(n);
  Integer out;
  return static_cast<long>(mpz_remove(out.get_mpz_t(), m.get_mpz_t(), p.get_mpz_t()));
}

bool is_prime(const Integer& p) {
  return p > 1 && mpz_probab_prime_p(p.get_mpz_t(), 30) > 0;
}

std::string join_values(const std::vector<Value>& vs) {
  std::string s;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i) s += ",";
    s += vs[i].to_string();
  }
  return vs.size() == 1 ? s : "[" + s + "]";
}

/// Element x scaled by a unit-free factor so that its value becomes
/// `target`, or nullopt when no witness is available.
std::optional<Element> shift_to(const Valuation& v, const Element& x, const Value& current, const Value& target) {
  Value need = target - current;
  try {
    if (v.manis) return x * coerce(v.preimage(need), v.ring);
    Element w = v.signed_witness(need);
    Value got = v(w);
    if (got == need) return x * w;
    if (got == -need && is_unit(w)) return x * divide(v.ring->one(), w);
  } catch (const std::exception&) {
  }
  return std::nullopt;
}

}  // namespace

ValuationPtr padic(const Integer& p, const RingPtr& ring) {
  if (!is_prime(p)) throw std::invalid_argument("padic: " + p.get_str() + " is not prime");
  if (ring->kind() != Ring::Kind::integers && ring->kind() != Ring::Kind::rationals)
    throw std::invalid_argument("padic: ring must be Z or Q, got " + ring->describe());
  auto v = std::make_shared<Valuation>();
  const bool field = ring->kind() == Ring::Kind::rationals;
  v->name = "v" + p.get_str();
  v->provenance = "padic";
  v->ring = ring;
  v->group = ValueGroup::integers();
  v->prime = p;
  v->eval_fn = [p](const Element& x) {
    if (x.is_zero()) return Value::infinity();
    Rational r = x.as_rational();
    return Value::of(remove_prime(r.get_num(), p) - remove_prime(r.get_den(), p));
  };
  v->support = Ideal::zero();
  v->local = field;
  v->manis = field;
  if (field) {
    v->preimage_fn = [p, ring](const Value& g) {
      return power(ring->from_integer(p), g.coords()[0].get_si());
    };
  }
  v->witness_fn = [p, ring](const Value& g) {
    return power(ring->from_integer(p), std::labs(g.coords()[0].get_si()));
  };
  RingPtr fp = Ring::quotient(Ring::integers(), Ideal::principal(p));
  v->residue = ResidueMap{fp, [fp](const Element& x) { return coerce(x, fp); },
                          [ring](const Element& t) { return coerce(t, ring); }};
  v->distinguished = {ring->from_integer(p)};
  return v;
}

ValuationPtr trivial(const RingPtr& ring, Ideal support) {
  auto v = std::make_shared<Valuation>();
  v->name = support.kind == Ideal::Kind::zero ? "trivial" : "trivial[" + support.describe(ring->variables()) + "]";
  v->provenance = "trivial";
  v->ring = ring;
  v->group = ValueGroup::trivial();
  v->eval_fn = [support](const Element& x) {
    if (x.is_zero() || (support.kind != Ideal::Kind::zero && support.contains(x))) return Value::infinity();
    return Value::zero(0);
  };
  v->support = support;
  v->manis = true;
  v->preimage_fn = [ring](const Value&) { return ring->one(); };
  v->local = ring->is_field() && support.kind == Ideal::Kind::zero;
  RingPtr target = Ring::quotient(ring, support);
  v->residue = ResidueMap{target, [support](const Element& x) { return quotient_reduce(x, support); },
                          [ring](const Element& t) { return coerce(t, ring); }};
  if (support.kind == Ideal::Kind::principal) v->distinguished.push_back(ring->from_integer(support.generator));
  if (support.kind == Ideal::Kind::variables)
    for (auto i : support.vars) v->distinguished.push_back(ring->variable(ring->variables()[i]));
  return v;
}

ValuationPtr gauss_extend(const ValuationPtr& u, const RingPtr& poly_ring, std::vector<Value> gammas) {
  if (poly_ring->kind() != Ring::Kind::polynomial)
    throw std::invalid_argument("gauss: target must be a polynomial ring, got " + poly_ring->describe());
  if (!same_ring(poly_ring->base(), u->ring))
    throw RingMismatch("gauss: base valuation lives on " + u->ring->describe() + ", polynomial ring is over " +
                       poly_ring->base()->describe());
  if (u->support.kind != Ideal::Kind::zero) throw std::invalid_argument("gauss: base valuation must have support {0}");
  if (gammas.size() != poly_ring->nvars())
    throw std::invalid_argument("gauss: expected " + std::to_string(poly_ring->nvars()) + " gamma values, got " +
                                std::to_string(gammas.size()));
  std::size_t k = u->group.rank();
  for (const auto& g : gammas) {
    if (g.is_infinite()) throw std::invalid_argument("gauss: gamma must be finite");
    k = std::max(k, g.rank());
  }
  for (auto& g : gammas) g = embed_value(g, k);
  const std::size_t r = u->group.rank();

  auto v = std::make_shared<Valuation>();
  v->name = "gauss(" + u->name + ", gamma=" + join_values(gammas) + ")";
  v->provenance = "gauss";
  v->ring = poly_ring;
  v->group = ValueGroup::lex(k);
  v->support = Ideal::zero();
  RingPtr base = u->ring;
  v->eval_fn = [u, base, gammas, k](const Element& f) {
    if (f.is_zero()) return Value::infinity();
    const Poly& p = f.num();
    std::optional<Value> best;
    for (const auto& [m, c] : p.terms()) {
      Value val = embed_value((*u)(base->from_rational(c)), k);
      for (std::size_t j = 0; j < m.size(); ++j)
        if (m[j]) val = val + scale(gammas[j], static_cast<long>(m[j]));
      if (!best || val < *best) best = val;
    }
    return *best;
  };

  // Manis iff every coordinate and sign has a witness: the base valuation
  // covers its own (trailing) coordinates, variables cover +-unit vectors.
  auto var_for = [gammas, k](std::size_t i, int sign) -> std::optional<std::size_t> {
    for (std::size_t j = 0; j < gammas.size(); ++j) {
      std::vector<Integer> c(k, 0);
      c[i] = sign;
      if (gammas[j] == Value(c)) return j;
    }
    return std::nullopt;
  };
  bool manis = u->manis;
  for (std::size_t i = 0; i + r < k && manis; ++i)
    manis = var_for(i, 1).has_value() && var_for(i, -1).has_value();
  v->manis = manis;
  if (manis) {
    v->preimage_fn = [u, poly_ring, var_for, k, r](const Value& g) {
      std::vector<Integer> tail(g.coords().end() - static_cast<long>(r), g.coords().end());
      Element x = coerce(u->preimage(Value(tail)), poly_ring);
      for (std::size_t i = 0; i + r < k; ++i) {
        const Integer& c = g.coords()[i];
        if (c == 0) continue;
        auto j = var_for(i, c > 0 ? 1 : -1);
        Element xj = poly_ring->variable(poly_ring->variables()[*j]);
        x = x * power(xj, Integer(abs(c)).get_si());
      }
      return x;
    };
  }
  if (k == 1) {
    // Atom of value +-1: a variable, or a base witness.
    std::optional<Element> atom;
    if (auto j = var_for(0, 1)) atom = poly_ring->variable(poly_ring->variables()[*j]);
    else if (auto j2 = var_for(0, -1)) atom = poly_ring->variable(poly_ring->variables()[*j2]);
    else if (r == 1 && (u->manis || u->witness_fn)) atom = coerce(u->signed_witness(Value::of(1)), poly_ring);
    if (atom) {
      Element a = *atom;
      v->witness_fn = [a](const Value& g) { return power(a, std::labs(g.coords()[0].get_si())); };
    }
  }
  bool all_negative = std::all_of(gammas.begin(), gammas.end(), [](const Value& g) { return g.sign() < 0; });
  if (r == 0 && all_negative) {
    // R_v is the base ring; the residue of a constant is itself.
    v->residue = ResidueMap{base, [base](const Element& f) { return coerce(f, base); },
                            [poly_ring](const Element& t) { return coerce(t, poly_ring); }};
    v->negative_degree = poly_ring->nvars() == 1 && gammas[0] == Value::of(-1);
  }
  v->local = false;
  for (const auto& name : poly_ring->variables()) v->distinguished.push_back(poly_ring->variable(name));
  for (const auto& d : u->distinguished) v->distinguished.push_back(coerce(d, poly_ring));
  return v;
}

ValuationPtr degree_valuation(const RingPtr& ring) {
  if (ring->kind() == Ring::Kind::polynomial) {
    if (ring->nvars() != 1) throw std::invalid_argument("deg: ring must be univariate");
    auto g = gauss_extend(trivial(ring->base()), ring, {Value::of(-1)});
    auto v = std::make_shared<Valuation>(*g);
    v->name = "deg";
    v->provenance = "degree";
    return v;
  }
  if (ring->kind() != Ring::Kind::fraction || ring->nvars() != 1)
    throw std::invalid_argument("deg: ring must be a univariate polynomial ring or its fraction field, got " +
                                ring->describe());
  auto v = std::make_shared<Valuation>();
  v->name = "deg";
  v->provenance = "degree";
  v->ring = ring;
  v->group = ValueGroup::integers();
  v->support = Ideal::zero();
  v->negative_degree = true;
  v->eval_fn = [](const Element& x) {
    if (x.is_zero()) return Value::infinity();
    return Value::of(static_cast<long>(x.den().total_degree()) - static_cast<long>(x.num().total_degree()));
  };
  v->manis = true;
  Element inv_x = divide(ring->one(), ring->variable(ring->variables()[0]));
  v->preimage_fn = [inv_x](const Value& g) { return power(inv_x, g.coords()[0].get_si()); };
  v->local = true;
  RingPtr q = Ring::rationals();
  v->residue = ResidueMap{q,
                          [q](const Element& x) {
                            if (x.is_zero() || x.num().total_degree() < x.den().total_degree()) return q->zero();
                            if (x.num().total_degree() > x.den().total_degree())
                              throw NotAMember("residue of an element outside R_v");
                            return q->from_rational(x.num().leading_coefficient() / x.den().leading_coefficient());
                          },
                          [ring](const Element& t) { return ring->from_rational(t.as_rational()); }};
  v->distinguished = {ring->variable(ring->variables()[0]), inv_x};
  return v;
}

ValuationPtr frac_extend_val(const ValuationPtr& v) {
  const RingPtr& r = v->ring;
  if (r->is_field()) return v;
  if (v->prime != 0 && r->kind() == Ring::Kind::integers) return padic(v->prime, Ring::rationals());
  if (v->negative_degree && r->kind() == Ring::Kind::polynomial) {
    auto d = degree_valuation(Ring::fraction(r));
    auto out = std::make_shared<Valuation>(*d);
    out->name = v->name;
    return out;
  }
  RingPtr domain = Ring::quotient(r, v->support);
  RingPtr field = Ring::fraction(domain);
  if (v->provenance == "trivial") return trivial(field);

  auto nu = std::make_shared<Valuation>();
  nu->name = "frac(" + v->name + ")";
  nu->provenance = "frac-extended";
  nu->ring = field;
  nu->group = v->group;
  nu->support = Ideal::zero();
  nu->eval_fn = [v, r](const Element& x) {
    if (x.is_zero()) return Value::infinity();
    Integer l = lcm(x.num().denominator_lcm(), x.den().denominator_lcm());
    Poly a = x.num() * Rational(l);
    Poly b = x.den() * Rational(l);
    return (*v)(Element(r, a)) - (*v)(Element(r, b));
  };
  nu->manis = true;
  nu->preimage_fn = [v, field](const Value& g) {
    Element w = v->signed_witness(g);
    Element e = coerce(w, field);
    if ((*v)(w) == g) return e;
    return divide(field->one(), e);
  };
  nu->local = true;
  for (const auto& d : v->distinguished) {
    try {
      nu->distinguished.push_back(coerce(d, field));
    } catch (const std::exception&) {
    }
  }
  return nu;
}

ValuationPtr composite(const ValuationPtr& v, const ValuationPtr& u) {
  if (!v->manis) throw std::invalid_argument("composite: " + v->name + " is not Manis");
  if (!v->ring->is_field()) throw std::invalid_argument("composite: " + v->name + " must live on a field");
  if (!v->residue) throw std::invalid_argument("composite: " + v->name + " has no residue map");
  if (!same_ring(v->residue->target, u->ring))
    throw RingMismatch("composite: " + u->name + " must live on the residue field " +
                       v->residue->target->describe());
  const std::size_t kv = v->group.rank();
  const std::size_t ku = u->group.rank();
  std::vector<Element> pis;
  for (std::size_t i = 0; i < kv; ++i) pis.push_back(v->preimage(v->group.unit(i)));
  auto section = [pis, ring = v->ring](const Value& g) {
    Element s = ring->one();
    for (std::size_t i = 0; i < pis.size(); ++i) s = s * power(pis[i], g.coords()[i].get_si());
    return s;
  };

  auto w = std::make_shared<Valuation>();
  w->name = "composite(" + v->name + ", " + u->name + ")";
  w->provenance = "composite";
  w->ring = v->ring;
  w->group = ValueGroup::lex(kv + ku);
  w->support = Ideal::zero();
  w->eval_fn = [v, u, section](const Element& x) {
    if (x.is_zero()) return Value::infinity();
    Value a = (*v)(x);
    Value b = (*u)(v->residue->reduce(x * section(-a)));
    std::vector<Integer> c = a.coords();
    c.insert(c.end(), b.coords().begin(), b.coords().end());
    return Value(std::move(c));
  };
  w->manis = u->manis;
  if (w->manis) {
    w->preimage_fn = [v, u, section, kv](const Value& g) {
      std::vector<Integer> a(g.coords().begin(), g.coords().begin() + static_cast<long>(kv));
      std::vector<Integer> b(g.coords().begin() + static_cast<long>(kv), g.coords().end());
      return section(Value(a)) * v->residue->lift(u->preimage(Value(b)));
    };
  }
  if (u->residue) {
    w->residue = ResidueMap{u->residue->target,
                            [v, u](const Element& x) {
                              if ((*v)(x).sign() > 0) return u->residue->target->zero();
                              return u->residue->reduce(v->residue->reduce(x));
                            },
                            [v, u](const Element& t) { return v->residue->lift(u->residue->lift(t)); }};
  }
  w->local = true;
  w->distinguished = pis;
  for (const auto& d : u->distinguished) w->distinguished.push_back(v->residue->lift(d));
  return w;
}

ValuationPtr quotient_val(const ValuationPtr& w, const ValuationPtr& v) {
  if (!v->residue) throw std::invalid_argument("quotient: " + v->name + " has no residue map");
  if (!same_ring(w->ring, v->ring)) throw RingMismatch("quotient: valuations live on different rings");
  const std::size_t drop = v->group.rank();
  if (w->group.rank() < drop) throw GroupMismatch("quotient: " + w->name + " has smaller rank than " + v->name);
  const RingPtr target = v->residue->target;

  auto q = std::make_shared<Valuation>();
  q->name = w->name + "/" + v->name;
  q->provenance = "quotient";
  q->ring = target;
  q->group = ValueGroup::lex(w->group.rank() - drop);
  q->support = Ideal::zero();
  q->eval_fn = [w, v, drop](const Element& r) {
    if (r.is_zero()) return Value::infinity();
    Value val = (*w)(v->residue->lift(r));
    if (val.is_infinite()) return val;
    for (std::size_t i = 0; i < drop; ++i)
      if (val.coords()[i] != 0)
        throw std::logic_error(w->name + " takes value " + val.to_string() + " on a unit of " + v->name);
    return drop_leading(val, drop);
  };
  q->manis = w->manis;
  if (q->manis) {
    q->preimage_fn = [w, v](const Value& g) { return v->residue->reduce(w->preimage(embed_value(g, w->group.rank()))); };
  }
  if (w->residue) {
    q->residue = ResidueMap{w->residue->target,
                            [w, v](const Element& r) { return w->residue->reduce(v->residue->lift(r)); },
                            [w, v](const Element& t) { return v->residue->reduce(w->residue->lift(t)); }};
  }
  q->local = target->is_field();
  for (const auto& d : w->distinguished) {
    try {
      if ((*v)(d).is_zero()) q->distinguished.push_back(v->residue->reduce(d));
    } catch (const std::exception&) {
    }
  }
  return q;
}

ValuationPtr scaled(const ValuationPtr& v, long k) {
  if (k <= 0) throw std::invalid_argument("scaled: factor must be positive");
  auto s = std::make_shared<Valuation>(*v);
  s->name = std::to_string(k) + "*" + v->name;
  s->provenance = "scaled";
  s->eval_fn = [v, k](const Element& x) { return scale((*v)(x), k); };
  s->manis = k == 1 && v->manis;
  if (!s->manis) s->preimage_fn = nullptr;
  s->witness_fn = nullptr;
  s->prime = 0;
  s->negative_degree = false;
  return s;
}

Position classify_position(const Valuation& v, const Element& x) {
  Value val = v(x);
  if (val.is_infinite()) return Position::in_support;
  int s = val.sign();
  if (s > 0) return Position::in_ideal;
  if (s == 0) return Position::in_units;
  return Position::outside;
}

std::vector<Element> ring_samples(const Valuation& v, const std::vector<Element>& pool) {
  std::vector<Element> out;
  out.reserve(pool.size());
  for (const auto& x : pool) {
    Value val = v(x);
    if (val.sign() >= 0) {
      out.push_back(x);
    } else if (auto y = shift_to(v, x, val, v.group.zero())) {
      out.push_back(*y);
    }
  }
  return out;
}

std::vector<Element> ideal_samples(const Valuation& v, const std::vector<Element>& pool) {
  std::vector<Element> out;
  if (v.group.rank() == 0) {
    for (const auto& x : pool)
      if (v(x).is_infinite()) out.push_back(x);
    return out;
  }
  const Value eps = v.group.unit(v.group.rank() - 1);
  for (const auto& x : pool) {
    Value val = v(x);
    if (val.sign() > 0) {
      out.push_back(x);
    } else if (auto y = shift_to(v, x, val, eps)) {
      out.push_back(*y);
    }
  }
  return out;
}

Findings check_val_axioms(const Valuation& v, const std::vector<Element>& pool, const Sweep& sweep) {
  Findings out;
  const RingPtr& r = v.ring;
  {
    Finding f{"V1", Status::pass, {}, "", 1};
    if (!v(r->zero()).is_infinite()) {
      f.status = Status::fail;
      f.witness = {r->zero()};
      f.detail = "v(0) = " + v(r->zero()).to_string();
    }
    out.add(f);
  }
  {
    Finding f{"V2", Status::pass, {}, "", 1};
    Value one = v(r->one());
    if (!(one == v.group.zero())) {
      f.status = Status::fail;
      f.witness = {r->one()};
      f.detail = "v(1) = " + one.to_string();
    }
    out.add(f);
  }
  out.add(sweep_singles("value-group", sweep, pool, [&](const Element& x) { return !v.group.contains(v(x)); }));
  out.add(sweep_pairs("V3", sweep, pool, [&](const Element& x, const Element& y) { return v(x * y) != v(x) + v(y); }));
  out.add(sweep_pairs("V4", sweep, pool,
                      [&](const Element& x, const Element& y) { return v(x + y) < min_value(v(x), v(y)); }));
  out.add(sweep_pairs("valmin", sweep, pool, [&](const Element& x, const Element& y) {
    Value a = v(x), b = v(y);
    return a != b && v(x + y) != min_value(a, b);
  }));
  out.add(sweep_pairs("support-prime", sweep, pool, [&](const Element& x, const Element& y) {
    return v(x * y).is_infinite() && !v(x).is_infinite() && !v(y).is_infinite();
  }));
  out.add(sweep_singles("support-agrees", sweep, pool, [&](const Element& x) {
    bool in = x.is_zero() || (v.support.kind != Ideal::Kind::zero && v.support.contains(x));
    return in != v(x).is_infinite();
  }));
  if (v.manis) {
    Finding f{"preimage", Status::pass, {}, "", 0};
    std::vector<Value> grid{v.group.zero()};
    for (std::size_t i = 0; i < v.group.rank(); ++i)
      for (long c : {1L, -1L, 2L, -3L}) grid.push_back(scale(v.group.unit(i), c));
    for (const auto& x : pool) {
      Value val = v(x);
      if (!val.is_infinite()) grid.push_back(val);
      if (grid.size() > 64) break;
    }
    for (const auto& g : grid) {
      ++f.samples_used;
      try {
        Element x = v.preimage(g);
        if (v(x) != g) {
          f.status = Status::fail;
          f.witness = {x};
          f.detail = "preimage of " + g.to_string() + " has value " + v(x).to_string();
          break;
        }
      } catch (const std::exception& e) {
        f.status = Status::fail;
        f.detail = "preimage of " + g.to_string() + ": " + e.what();
        break;
      }
    }
    out.add(f);
  }
  return out;
}

CoarseningReport coarsening_check(const Valuation& v, const Valuation& w, const std::vector<Element>& pool,
                                  const Sweep& sweep) {
  if (!same_ring(v.ring, w.ring)) throw RingMismatch("coarsening: valuations live on different rings");
  CoarseningReport rep;
  auto& f = rep.findings;
  f.add(sweep_singles("R_w in R_v", sweep, pool, [&](const Element& x) { return w.in_ring(x) && !v.in_ring(x); }));
  f.add(sweep_singles("I_v in I_w", sweep, pool, [&](const Element& x) { return v.in_ideal(x) && !w.in_ideal(x); }));
  rep.coarsening = f.items[0].ok() && f.items[1].ok();

  Findings thm;
  thm.add(sweep_pairs("coarser-1", sweep, pool,
                      [&](const Element& x, const Element& y) { return w(x) <= w(y) && !(v(x) <= v(y)); }));
  thm.add(sweep_pairs("coarser-2", sweep, pool, [&](const Element& x, const Element& y) {
    return w(x) <= w(y) && v(x).sign() >= 0 && v(y).sign() < 0;
  }));
  thm.add(sweep_pairs("coarser-3", sweep, pool, [&](const Element& x, const Element& y) {
    return w(x) <= w(y) && v(x).sign() > 0 && v(y).sign() <= 0;
  }));
  f.append(thm);

  const bool both = v.manis && w.manis && v.nontrivial() && w.nontrivial();
  if (both) {
    // For nontrivial Manis valuations the containments and (1)-(3) coincide.
    Finding agree{"coarser-agreement", Status::pass, {}, "", 0};
    for (const auto& t : thm.items) {
      if (t.ok() != rep.coarsening) {
        agree.status = Status::hard_inconsistency;
        agree.witness = t.witness;
        agree.detail = t.name + (t.ok() ? " holds" : " fails") + " but containments " +
                       (rep.coarsening ? "hold" : "fail");
        break;
      }
    }
    f.add(agree);
    if (rep.coarsening) {
      Finding sup = sweep_singles("powerssup", sweep, pool,
                                  [&](const Element& x) { return v(x).is_infinite() != w(x).is_infinite(); });
      if (!sup.ok()) sup.status = Status::hard_inconsistency;
      f.add(sup);
    }
  }
  return rep;
}

Finding equivalent_check(const Valuation& v, const Valuation& w, const std::vector<Element>& pool,
                         const Sweep& sweep) {
  if (!same_ring(v.ring, w.ring)) throw RingMismatch("equivalent: valuations live on different rings");
  return sweep_pairs("equivalent", sweep, pool,
                     [&](const Element& x, const Element& y) { return (v(x) <= v(y)) != (w(x) <= w(y)); });
}

Findings quotient_well_defined(const Valuation& w, const Valuation& v, const std::vector<Element>& pool,
                               const Sweep& sweep) {
  Findings out;
  std::vector<Element> units;
  for (const auto& x : ring_samples(v, pool))
    if (v(x).is_zero()) units.push_back(x);
  std::vector<Element> ideal = ideal_samples(v, pool);
  Finding f{"quotient-well-defined", Status::pass, {}, "", 0};
  if (units.empty() || ideal.empty()) {
    f.status = Status::inconclusive;
    f.detail = "no unit or ideal samples";
    out.add(f);
    return out;
  }
  Rng rng(sweep.seed ^ 0x51ed270b27a3c4e1ULL);
  const std::size_t n = std::max<std::size_t>(sweep.budget, units.size());
  for (std::size_t t = 0; t < n; ++t) {
    const Element& a = units[t % units.size()];
    const Element& c = ideal[rng.below(ideal.size())];
    ++f.samples_used;
    try {
      bool same_value = w(a) == w(a + c);
      bool same_class = !v.residue || v.residue->reduce(a) == v.residue->reduce(a + c);
      if (!same_value || !same_class) {
        f.status = Status::fail;
        f.witness = {a, c};
        f.detail = same_value ? "residue class changed" : "w(a) != w(a + c)";
        break;
      }
    } catch (const std::exception& e) {
      f.status = Status::fail;
      f.witness = {a, c};
      f.detail = std::string("error: ") + e.what();
      break;
    }
  }
  out.add(f);
  return out;
}

}  // namespace qord
