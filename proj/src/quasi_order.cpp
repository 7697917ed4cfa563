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

#include "qord/quasi_order.hpp"

#include <algorithm>

namespace qord {

std::string to_string(QoClass c) {
  return c == QoClass::order ? "order" : "proper-quasi-order";
}

std::string to_string(Cmp c) {
  switch (c) {
    case Cmp::less:
      return "strictly-less";
    case Cmp::equivalent:
      return "equivalent";
    case Cmp::greater:
      return "strictly-greater";
  }
  return "?";
}

namespace {

int sgn(const Rational& r) {
  return sgn(r.get_num());
}

void require_univariate(const RingPtr& ring, const char* what) {
  bool ok = (ring->kind() == Ring::Kind::polynomial || ring->kind() == Ring::Kind::fraction) && ring->nvars() == 1;
  if (!ok) throw std::invalid_argument(std::string(what) + ": ring must be univariate, got " + ring->describe());
}

/// Sign of p(-X) at +infinity, or of p at +infinity.
int sign_at_inf(const Poly& p, int direction) {
  if (p.is_zero()) return 0;
  int s = sgn(p.leading_coefficient());
  if (direction < 0 && p.total_degree() % 2 == 1) s = -s;
  return s;
}

}  // namespace

SignOrder sign_standard(const RingPtr& ring) {
  if (ring->kind() != Ring::Kind::integers && ring->kind() != Ring::Kind::rationals)
    throw std::invalid_argument("standard order needs Z or Q, got " + ring->describe());
  return {"order", ring, [](const Element& x) { return x.is_zero() ? 0 : sgn(x.as_rational()); }, Ideal::zero()};
}

SignOrder sign_at_origin(const RingPtr& ring) {
  if (ring->kind() != Ring::Kind::polynomial)
    throw std::invalid_argument("f(0)-order needs a polynomial ring, got " + ring->describe());
  std::vector<std::size_t> vars(ring->nvars());
  for (std::size_t i = 0; i < vars.size(); ++i) vars[i] = i;
  return {"f(0)-order", ring, [](const Element& f) { return sgn(f.num().constant_term()); },
          Ideal::variables(vars)};
}

SignOrder sign_at_infinity(const RingPtr& ring, int direction) {
  require_univariate(ring, "order at infinity");
  if (direction != 1 && direction != -1) throw std::invalid_argument("direction must be 1 or -1");
  return {direction > 0 ? "X->+inf" : "X->-inf", ring,
          [direction](const Element& f) { return sign_at_inf(f.num(), direction) * sign_at_inf(f.den(), direction); },
          Ideal::zero()};
}

SignOrder sign_at_zero_plus(const RingPtr& ring) {
  require_univariate(ring, "order at 0+");
  return {"X->0+", ring,
          [](const Element& f) {
            if (f.is_zero()) return 0;
            return sgn(f.num().trailing_coefficient()) * sgn(f.den().trailing_coefficient());
          },
          Ideal::zero()};
}

SignOrder sign_flipped(const RingPtr& ring) {
  SignOrder s = sign_standard(ring);
  s.name = "flipped-order";
  auto base = s.sign;
  s.sign = [base](const Element& x) { return -base(x); };
  return s;
}

bool QuasiOrder::le(const Element& x, const Element& y) const {
  if (!same_ring(x.ring(), ring) || !same_ring(y.ring(), ring))
    throw RingMismatch("quasi-order on " + ring->describe() + " given elements of " + x.ring()->describe() + " and " +
                       y.ring()->describe());
  return le_fn(x, y);
}

bool QuasiOrder::declared_zero(const Element& x) const {
  if (is_zero) return is_zero(x);
  if (x.is_zero()) return true;
  return support.kind != Ideal::Kind::zero && support.contains(x);
}

QuasiOrderPtr from_sign_order(const SignOrder& s) {
  auto q = std::make_shared<QuasiOrder>();
  q->name = s.name;
  q->provenance = "sign-order";
  q->ring = s.ring;
  auto sign = s.sign;
  q->le_fn = [sign](const Element& x, const Element& y) { return sign(y - x) >= 0; };
  q->declared = QoClass::order;
  q->support = s.support;
  for (const auto& v : s.ring->variables()) q->distinguished.push_back(s.ring->variable(v));
  return q;
}

QuasiOrderPtr from_valuation(const ValuationPtr& v) {
  auto q = std::make_shared<QuasiOrder>();
  q->name = "qo(" + v->name + ")";
  q->provenance = "valuation-induced";
  q->ring = v->ring;
  q->le_fn = [v](const Element& x, const Element& y) { return (*v)(y) <= (*v)(x); };
  q->declared = QoClass::proper;
  q->support = v->support;
  q->distinguished = v->distinguished;
  q->valuation = v;
  return q;
}

QuasiOrderPtr frac_extend_qo(const QuasiOrderPtr& q) {
  if (q->is_zero) throw std::invalid_argument("frac: quasi-orders on residue representatives are not supported");
  const RingPtr& r = q->ring;
  if (r->is_field() && q->support.kind == Ideal::Kind::zero) return q;
  RingPtr domain = Ring::quotient(r, q->support);
  RingPtr field = Ring::fraction(domain);
  auto split = [domain, r](const Element& f) {
    Integer l = lcm(f.num().denominator_lcm(), f.den().denominator_lcm());
    Element a(domain, f.num() * Rational(l));
    Element b(domain, f.den() * Rational(l));
    return std::make_pair(representative(a, r), representative(b, r));
  };
  auto out = std::make_shared<QuasiOrder>();
  out->name = "frac(" + q->name + ")";
  out->provenance = "fraction-extended";
  out->ring = field;
  out->le_fn = [q, split](const Element& f, const Element& g) {
    auto [x, y] = split(f);
    auto [a, b] = split(g);
    return q->le(x * y * b * b, a * b * y * y);
  };
  out->declared = q->declared;
  out->support = Ideal::zero();
  for (const auto& d : q->distinguished) {
    try {
      out->distinguished.push_back(coerce(quotient_reduce(d, q->support), field));
    } catch (const std::exception&) {
    }
  }
  return out;
}

QuasiOrderPtr restrict_qo(const QuasiOrderPtr& q, const RingPtr& ring, std::function<Element(const Element&)> map,
                          Ideal support, std::string name) {
  auto out = std::make_shared<QuasiOrder>();
  out->name = std::move(name);
  out->provenance = "restricted";
  out->ring = ring;
  out->le_fn = [q, map](const Element& x, const Element& y) { return q->le(map(x), map(y)); };
  out->declared = q->declared;
  out->support = std::move(support);
  for (const auto& v : ring->variables()) out->distinguished.push_back(ring->variable(v));
  return out;
}

Cmp qcmp(const QuasiOrder& q, const Element& x, const Element& y) {
  bool a = q.le(x, y), b = q.le(y, x);
  if (a && b) return Cmp::equivalent;
  return a ? Cmp::less : Cmp::greater;
}

bool support_member(const QuasiOrder& q, const Element& x) {
  return q.sim(x, q.ring->zero());
}

QoClass classify_qo(const QuasiOrder& q) {
  const Element zero = q.ring->zero();
  const Element m1 = -q.ring->one();
  if (q.strict(zero, m1)) return QoClass::proper;
  if (q.strict(m1, zero)) return QoClass::order;
  throw std::domain_error("-1 ~ 0: the support contains 1");
}

Finding classify_check(const QuasiOrder& q) {
  Finding f{"classify", Status::pass, {}, "", 1};
  try {
    QoClass c = classify_qo(q);
    f.detail = to_string(c);
    if (q.declared && *q.declared != c) {
      f.status = Status::fail;
      f.detail = "classified " + to_string(c) + " but declared " + to_string(*q.declared);
    }
  } catch (const std::domain_error& e) {
    f.status = Status::fail;
    f.witness = {q.ring->one()};
    f.detail = e.what();
  }
  return f;
}

std::vector<Element> carrier_pool(const QuasiOrder& q, const std::vector<Element>& pool) {
  return q.carrier ? q.carrier(pool) : pool;
}

Findings check_qo_axioms(const QuasiOrder& q, const std::vector<Element>& raw, const Sweep& sweep) {
  const std::vector<Element> pool = carrier_pool(q, raw);
  const Element zero = q.ring->zero();
  const Element one = q.ring->one();
  Findings out;
  out.add(sweep_singles("reflexive", sweep, pool, [&](const Element& x) { return !q.le(x, x); }));
  out.add(sweep_pairs("total", sweep, pool,
                      [&](const Element& x, const Element& y) { return !q.le(x, y) && !q.le(y, x); }));
  out.add(sweep_triples("transitive", sweep, pool, [&](const Element& x, const Element& y, const Element& z) {
    return q.le(x, y) && q.le(y, z) && !q.le(x, z);
  }));
  {
    Finding f{"QR1", Status::pass, {}, "", 1};
    if (!q.strict(zero, one)) {
      f.status = Status::fail;
      f.witness = {zero, one};
      f.detail = "0 < 1 fails";
    }
    out.add(f);
  }
  out.add(sweep_pairs("QR2", sweep, pool, [&](const Element& x, const Element& y) {
    return q.le(x * y, zero) && !q.le(x, zero) && !q.le(y, zero);
  }));
  out.add(sweep_triples("QR3", sweep, pool, [&](const Element& x, const Element& y, const Element& z) {
    return q.le(x, y) && q.le(zero, z) && !q.le(x * z, y * z);
  }));
  out.add(sweep_triples("QR4", sweep, pool, [&](const Element& x, const Element& y, const Element& z) {
    return q.le(x, y) && !q.sim(z, y) && !q.le(x + z, y + z);
  }));
  out.add(sweep_triples("QR5", sweep, pool, [&](const Element& x, const Element& y, const Element& z) {
    return q.strict(zero, z) && q.le(x * z, y * z) && !q.le(x, y);
  }));
  out.add(sweep_pairs("support-ideal", sweep, pool, [&](const Element& x, const Element& y) {
    if (!q.sim(x, zero)) return false;
    return !q.sim(x * y, zero) || (q.sim(y, zero) && !q.sim(x - y, zero));
  }));
  out.add(sweep_pairs("support-prime", sweep, pool, [&](const Element& x, const Element& y) {
    return q.sim(x * y, zero) && !q.sim(x, zero) && !q.sim(y, zero);
  }));
  out.add(sweep_singles("support-declared", sweep, pool,
                        [&](const Element& x) { return q.sim(x, zero) != q.declared_zero(x); }));
  return out;
}

Findings check_derived_lemmas(const QuasiOrder& q, const std::vector<Element>& raw, const Sweep& sweep) {
  const std::vector<Element> pool = carrier_pool(q, raw);
  const Element zero = q.ring->zero();
  auto nz = [&](const Element& x) { return !q.sim(x, zero); };
  auto max_of = [&](const Element& x, const Element& y) -> const Element& { return q.le(x, y) ? y : x; };
  Findings out;
  out.add(sweep_triples("QR5-sim", sweep, pool, [&](const Element& x, const Element& y, const Element& z) {
    return nz(z) && q.sim(x * z, y * z) && !q.sim(x, y);
  }));
  out.add(sweep_pairs("support-translation", sweep, pool, [&](const Element& x, const Element& y) {
    return q.sim(x, zero) && nz(y) && !q.sim(x + y, y);
  }));
  out.add(sweep_singles("negation-equivalence", sweep, pool, [&](const Element& x) {
    return q.sim(x, -x) != (q.le(zero, x) && q.le(zero, -x));
  }));
  out.add(sweep_pairs("equivalence-sign", sweep, pool, [&](const Element& x, const Element& y) {
    return q.sim(x, y) && !q.sim(x, -y) && !q.sim(zero, x - y);
  }));
  out.add(sweep_triples("equivalence-product", sweep, pool, [&](const Element& x, const Element& y, const Element& a) {
    return q.sim(x, y) && !q.sim(a * x, a * y);
  }));
  if (q.strict(zero, -q.ring->one())) {
    out.add(sweep_pairs("sum-below-max", sweep, pool,
                        [&](const Element& x, const Element& y) { return !q.le(x + y, max_of(x, y)); }));
  } else {
    out.add(Finding{"sum-below-max", Status::pass, {}, "skipped: 0 < -1 does not hold", 0});
  }
  out.add(sweep_triples("QR3-neg", sweep, pool, [&](const Element& x, const Element& y, const Element& z) {
    return q.le(x, y) && q.le(z, zero) && !q.le(y * z, x * z);
  }));
  out.add(sweep_triples("QR5-neg", sweep, pool, [&](const Element& x, const Element& y, const Element& z) {
    return q.le(x * z, y * z) && q.strict(z, zero) && !q.le(y, x);
  }));
  out.add(sweep_pairs("class-translation", sweep, pool, [&](const Element& c, const Element& x) {
    return q.sim(c, zero) && !q.sim(c + x, x);
  }));
  {
    // If E_x is strictly larger than E_0 + x on the samples, then E_x = -E_x.
    Finding f{"class-symmetry", Status::pass, {}, "", 0};
    const std::size_t k = std::min(pool.size(), sweep.pair_prefix);
    for (std::size_t i = 0; i < k && f.ok(); ++i) {
      const Element& x = pool[i];
      try {
        const Element* extra = nullptr;
        for (const auto& y : pool) {
          ++f.samples_used;
          if (q.sim(y, x) && nz(y - x)) {
            extra = &y;
            break;
          }
        }
        if (!extra) continue;
        for (const auto& z : pool) {
          ++f.samples_used;
          if (q.sim(z, x) && !q.sim(-z, x)) {
            f.status = Status::fail;
            f.witness = {x, *extra, z};
            break;
          }
        }
      } catch (const std::exception& e) {
        f.status = Status::fail;
        f.witness = {x};
        f.detail = std::string("error: ") + e.what();
      }
    }
    out.add(f);
  }
  return out;
}

Finding agreement(const std::string& name, const QuasiOrder& a, const QuasiOrder& b, const std::vector<Element>& pool,
                  const Sweep& sweep) {
  return sweep_pairs(name, sweep, pool, [&](const Element& x, const Element& y) { return a.le(x, y) != b.le(x, y); });
}

}  // namespace qord
