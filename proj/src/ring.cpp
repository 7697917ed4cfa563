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

#include "qord/ring.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace qord {

namespace {

bool is_one(const Poly& p) {
  return p.is_constant() && p.constant_term() == 1;
}

Rational constant_quotient(const Poly& num, const Poly& den) {
  if (!num.is_constant() || !den.is_constant()) throw NotAMember("value is not a constant");
  return num.constant_term() / den.constant_term();
}

Integer mod_positive(const Integer& a, const Integer& p) {
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), p.get_mpz_t());
  return r;
}

}  // namespace

Ideal Ideal::principal(const Integer& p) {
  Ideal i;
  i.kind = Kind::principal;
  i.generator = p;
  return i;
}

Ideal Ideal::variables(std::vector<std::size_t> vars) {
  Ideal i;
  i.kind = Kind::variables;
  std::sort(vars.begin(), vars.end());
  vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
  i.vars = std::move(vars);
  return i;
}

Ideal Ideal::valuation_support(std::string label, std::function<bool(const Element&)> member) {
  Ideal i;
  i.kind = Kind::valuation_support;
  i.label = std::move(label);
  i.member = std::move(member);
  return i;
}

bool Ideal::contains(const Element& x) const {
  switch (kind) {
    case Kind::zero:
      return x.is_zero();
    case Kind::principal: {
      Rational r = x.as_rational();
      if (r.get_den() != 1) throw NotAMember("principal ideal test needs an integer");
      return mpz_divisible_p(r.get_num_mpz_t(), generator.get_mpz_t()) != 0;
    }
    case Kind::variables:
      return x.den().is_constant() && x.num().substitute_zero(vars).is_zero();
    case Kind::valuation_support:
      return member(x);
  }
  return false;
}

std::string Ideal::describe(const std::vector<std::string>& names) const {
  switch (kind) {
    case Kind::zero:
      return "0";
    case Kind::principal:
      return generator.get_str();
    case Kind::variables: {
      std::string s;
      for (std::size_t i = 0; i < vars.size(); ++i) {
        if (i) s += ", ";
        s += names.at(vars[i]);
      }
      return s;
    }
    case Kind::valuation_support:
      return "supp(" + label + ")";
  }
  return "?";
}

Ring::Ring(Kind kind, RingPtr base, Ideal ideal, std::vector<std::string> vars)
    : kind_(kind), base_(std::move(base)), ideal_(std::move(ideal)), vars_(std::move(vars)) {
  switch (kind_) {
    case Kind::integers:
      description_ = "Z";
      break;
    case Kind::rationals:
      description_ = "Q";
      break;
    case Kind::polynomial: {
      description_ = "poly(" + base_->describe();
      for (const auto& v : vars_) description_ += ", " + v;
      description_ += ")";
      break;
    }
    case Kind::quotient:
      description_ = "quot(" + base_->describe() + ", " + ideal_.describe(vars_) + ")";
      break;
    case Kind::fraction:
      description_ = "frac(" + base_->describe() + ")";
      break;
  }
}

RingPtr Ring::integers() {
  static const RingPtr z(new Ring(Kind::integers, nullptr, Ideal::zero(), {}));
  return z;
}

RingPtr Ring::rationals() {
  static const RingPtr q(new Ring(Kind::rationals, nullptr, Ideal::zero(), {}));
  return q;
}

RingPtr Ring::polynomial(const RingPtr& base, std::vector<std::string> vars) {
  if (base->kind() != Kind::integers && base->kind() != Kind::rationals)
    throw std::invalid_argument("polynomial rings are built over Z or Q");
  if (vars.empty()) throw std::invalid_argument("polynomial ring needs at least one variable");
  std::set<std::string> seen;
  for (const auto& v : vars) {
    if (v.empty() || !(std::isalpha(static_cast<unsigned char>(v[0])) || v[0] == '_'))
      throw std::invalid_argument("bad variable name '" + v + "'");
    if (!seen.insert(v).second) throw std::invalid_argument("duplicate variable '" + v + "'");
  }
  return RingPtr(new Ring(Kind::polynomial, base, Ideal::zero(), std::move(vars)));
}

RingPtr Ring::quotient(const RingPtr& base, Ideal ideal) {
  switch (ideal.kind) {
    case Ideal::Kind::zero:
      return base;
    case Ideal::Kind::principal:
      if (base->kind() != Kind::integers)
        throw std::invalid_argument("principal quotients are supported over Z only");
      if (ideal.generator < 2 || mpz_probab_prime_p(ideal.generator.get_mpz_t(), 30) == 0)
        throw std::invalid_argument("quotient ideal " + ideal.generator.get_str() + "Z is not prime");
      return RingPtr(new Ring(Kind::quotient, base, std::move(ideal), {}));
    case Ideal::Kind::variables: {
      if (base->kind() != Kind::polynomial)
        throw std::invalid_argument("variable ideals need a polynomial ring");
      for (auto v : ideal.vars)
        if (v >= base->nvars()) throw std::invalid_argument("variable index out of range");
      if (ideal.vars.size() == base->nvars()) return base->base();
      return RingPtr(new Ring(Kind::quotient, base, std::move(ideal), base->variables()));
    }
    case Ideal::Kind::valuation_support:
      return RingPtr(new Ring(Kind::quotient, base, std::move(ideal), base->variables()));
  }
  throw std::logic_error("unreachable");
}

RingPtr Ring::fraction(const RingPtr& base) {
  switch (base->kind()) {
    case Kind::integers:
    case Kind::rationals:
      return rationals();
    case Kind::fraction:
      return base;
    case Kind::polynomial:
      return RingPtr(new Ring(Kind::fraction, polynomial(rationals(), base->variables()),
                              Ideal::zero(), base->variables()));
    case Kind::quotient:
      if (base->is_prime_field()) return base;
      if (base->ideal().kind == Ideal::Kind::variables) {
        auto qbase = quotient(polynomial(rationals(), base->base()->variables()), base->ideal());
        return RingPtr(new Ring(Kind::fraction, qbase, Ideal::zero(), base->variables()));
      }
      return RingPtr(new Ring(Kind::fraction, base, Ideal::zero(), base->variables()));
  }
  throw std::logic_error("unreachable");
}

std::size_t Ring::variable_index(const std::string& name) const {
  for (std::size_t i = 0; i < vars_.size(); ++i)
    if (vars_[i] == name) return i;
  return Poly::npos;
}

bool Ring::is_field() const {
  return kind_ == Kind::rationals || kind_ == Kind::fraction || is_prime_field();
}

Integer Ring::characteristic() const {
  return is_prime_field() ? ideal_.generator : Integer(0);
}

bool Ring::canonical() const {
  switch (kind_) {
    case Kind::quotient:
      return ideal_.kind != Ideal::Kind::valuation_support;
    case Kind::fraction:
      return nvars() <= 1 && base_->canonical();
    default:
      return true;
  }
}

bool Ring::integral() const {
  switch (kind_) {
    case Kind::integers:
      return true;
    case Kind::polynomial:
    case Kind::quotient:
      return base_->integral();
    default:
      return false;
  }
}

Element Ring::zero() const {
  return Element(shared_from_this(), Poly(nvars()), Poly(nvars(), Rational(1)));
}

Element Ring::one() const {
  return from_integer(1);
}

Element Ring::from_integer(const Integer& n) const {
  return Element(shared_from_this(), Poly(nvars(), Rational(n)), Poly(nvars(), Rational(1)));
}

Element Ring::from_rational(const Rational& r) const {
  return Element(shared_from_this(), Poly(nvars(), r), Poly(nvars(), Rational(1)));
}

Element Ring::variable(const std::string& name) const {
  auto idx = variable_index(name);
  if (idx == Poly::npos) throw NotAMember("no variable '" + name + "' in " + describe());
  return Element(shared_from_this(), Poly::variable(nvars(), idx), Poly(nvars(), Rational(1)));
}

void Ring::reduce_in_base(Poly& p) const {
  if (base_ && base_->kind() == Kind::quotient && base_->ideal().kind == Ideal::Kind::variables)
    p = p.substitute_zero(base_->ideal().vars);
}

bool Ring::payload_zero(const Poly& num) const {
  switch (kind_) {
    case Kind::quotient:
      if (ideal_.kind == Ideal::Kind::valuation_support)
        return ideal_.member(Element(base_, num, Poly(nvars(), Rational(1))));
      if (ideal_.kind == Ideal::Kind::variables) return num.substitute_zero(ideal_.vars).is_zero();
      return num.is_zero();
    case Kind::fraction:
      return base_->payload_zero(num);
    default:
      return num.is_zero();
  }
}

void Ring::canonicalize(Poly& num, Poly& den) const {
  if (num.nvars() != nvars() || den.nvars() != nvars())
    throw RingMismatch("payload arity does not match " + describe());
  if (den.is_zero()) throw std::domain_error("zero denominator");
  const Poly one(nvars(), Rational(1));
  switch (kind_) {
    case Kind::integers: {
      Rational r = constant_quotient(num, den);
      if (r.get_den() != 1) throw NotAMember(rational_to_string(r) + " is not an element of Z");
      num = Poly(0, r);
      den = one;
      return;
    }
    case Kind::rationals:
      num = Poly(0, constant_quotient(num, den));
      den = one;
      return;
    case Kind::polynomial:
      if (!den.is_constant()) throw NotAMember("non-constant denominator in " + describe());
      if (!is_one(den)) {
        num *= Rational(1) / den.constant_term();
        den = one;
      }
      if (integral() && !num.has_integer_coefficients())
        throw NotAMember(num.to_string(vars_) + " is not an element of " + describe());
      return;
    case Kind::quotient:
      if (ideal_.kind == Ideal::Kind::principal) {
        Rational r = constant_quotient(num, den);
        const Integer& p = ideal_.generator;
        Integer d = mod_positive(r.get_den(), p);
        if (d == 0) throw NotAMember("denominator not invertible modulo " + p.get_str());
        Integer inv;
        mpz_invert(inv.get_mpz_t(), d.get_mpz_t(), p.get_mpz_t());
        num = Poly(0, Rational(mod_positive(r.get_num() * inv, p)));
        den = one;
        return;
      }
      base_->canonicalize(num, den);
      if (ideal_.kind == Ideal::Kind::variables) num = num.substitute_zero(ideal_.vars);
      return;
    case Kind::fraction: {
      reduce_in_base(num);
      reduce_in_base(den);
      if (base_->payload_zero(den)) throw std::domain_error("zero denominator");
      if (num.is_zero()) {
        den = one;
        return;
      }
      const bool cancellable = base_->canonical();
      std::size_t var = Poly::npos;
      if (cancellable && jointly_univariate(num, den, &var)) {
        if (var == Poly::npos) {
          num = Poly(nvars(), num.constant_term() / den.constant_term());
          den = one;
          return;
        }
        Poly g = univariate_gcd(num, den, var);
        if (g.total_degree() > 0) {
          Poly q(nvars()), r(nvars());
          univariate_divmod(num, g, var, &q, &r);
          num = q;
          univariate_divmod(den, g, var, &q, &r);
          den = q;
        }
      }
      if (den.is_constant()) {
        num *= Rational(1) / den.constant_term();
        den = one;
        return;
      }
      Integer l;
      mpz_lcm(l.get_mpz_t(), num.denominator_lcm().get_mpz_t(), den.denominator_lcm().get_mpz_t());
      num *= Rational(l);
      den *= Rational(l);
      Integer g;
      mpz_gcd(g.get_mpz_t(), num.numerator_gcd().get_mpz_t(), den.numerator_gcd().get_mpz_t());
      Rational scale(Integer(1), g);
      if (den.leading_coefficient() < 0) scale = -scale;
      num *= scale;
      den *= scale;
      return;
    }
  }
}

bool same_ring(const RingPtr& a, const RingPtr& b) {
  return a == b || a->describe() == b->describe();
}

Element::Element(RingPtr ring, Poly num, Poly den)
    : ring_(std::move(ring)), num_(std::move(num)), den_(std::move(den)) {
  ring_->canonicalize(num_, den_);
}

Element::Element(RingPtr ring, Poly num) : ring_(std::move(ring)), num_(std::move(num)) {
  den_ = Poly(ring_->nvars(), Rational(1));
  ring_->canonicalize(num_, den_);
}

bool Element::is_zero() const {
  return ring_->payload_zero(num_);
}

Rational Element::as_rational() const {
  return constant_quotient(num_, den_);
}

std::string Element::to_string() const {
  const auto& names = ring_->variables();
  if (is_one(den_)) return num_.to_string(names);
  std::string n = num_.to_string(names), d = den_.to_string(names);
  if (num_.terms().size() > 1) n = "(" + n + ")";
  if (den_.terms().size() > 1 || d.find('*') != std::string::npos) d = "(" + d + ")";
  return n + "/" + d;
}

namespace {

void require_same(const Element& a, const Element& b) {
  if (!same_ring(a.ring(), b.ring()))
    throw RingMismatch("ring mismatch: " + a.ring()->describe() + " vs " + b.ring()->describe());
}

}  // namespace

Element Element::operator-() const {
  return Element(ring_, -num_, den_);
}

Element operator+(const Element& a, const Element& b) {
  require_same(a, b);
  if (is_one(a.den_) && is_one(b.den_)) return Element(a.ring_, a.num_ + b.num_, a.den_);
  if (a.den_ == b.den_) return Element(a.ring_, a.num_ + b.num_, a.den_);
  return Element(a.ring_, a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

Element operator-(const Element& a, const Element& b) {
  return a + (-b);
}

Element operator*(const Element& a, const Element& b) {
  require_same(a, b);
  if (is_one(a.den_) && is_one(b.den_)) return Element(a.ring_, a.num_ * b.num_, a.den_);
  return Element(a.ring_, a.num_ * b.num_, a.den_ * b.den_);
}

bool operator==(const Element& a, const Element& b) {
  require_same(a, b);
  const auto& r = *a.ring_;
  if (r.canonical()) return a.num_ == b.num_ && a.den_ == b.den_;
  if (r.kind() == Ring::Kind::fraction) return r.payload_zero(a.num_ * b.den_ - b.num_ * a.den_);
  return r.payload_zero(a.num_ - b.num_);
}

Element divide(const Element& a, const Element& b) {
  require_same(a, b);
  if (b.is_zero()) throw std::domain_error("division by zero");
  const auto& ring = a.ring();
  Poly num = a.num() * b.den();
  Poly den = a.den() * b.num();
  if (ring->kind() == Ring::Kind::polynomial && !den.is_constant()) {
    std::size_t var = Poly::npos;
    if (!jointly_univariate(num, den, &var))
      throw NotAMember("multivariate polynomial division is not supported");
    Poly q(ring->nvars()), r(ring->nvars());
    univariate_divmod(num, den, var, &q, &r);
    if (!r.is_zero()) throw NotAMember("division is not exact in " + ring->describe());
    return Element(ring, q);
  }
  return Element(ring, num, den);
}

Element power(const Element& a, long e) {
  if (e < 0) return divide(a.ring()->one(), power(a, -e));
  Element result = a.ring()->one();
  Element base = a;
  auto n = static_cast<unsigned long>(e);
  while (n) {
    if (n & 1UL) result = result * base;
    n >>= 1UL;
    if (n) base = base * base;
  }
  return result;
}

bool is_unit(const Element& a) {
  if (a.is_zero()) return false;
  const auto& r = *a.ring();
  if (r.is_field()) return true;
  if (!a.is_constant()) return false;
  if (r.integral()) return abs(a.as_rational()) == 1;
  return true;
}

Element coerce(const Element& x, const RingPtr& target) {
  if (same_ring(x.ring(), target)) return x;
  const auto& src = x.ring()->variables();
  std::vector<std::size_t> map(src.size(), Poly::npos);
  for (std::size_t i = 0; i < src.size(); ++i) {
    map[i] = target->variable_index(src[i]);
    if (map[i] == Poly::npos && (x.num().uses_variable(i) || x.den().uses_variable(i)))
      throw NotAMember("variable " + src[i] + " has no image in " + target->describe());
  }
  return Element(target, x.num().remap(target->nvars(), map), x.den().remap(target->nvars(), map));
}

Element quotient_reduce(const Element& x, const Ideal& ideal) {
  auto target = Ring::quotient(x.ring(), ideal);
  if (ideal.kind == Ideal::Kind::variables && target->nvars() == 0) {
    if (!x.den().is_constant()) throw NotAMember("quotient reduction needs a polynomial");
    Rational c = x.num().constant_term() / x.den().constant_term();
    return Element(target, Poly(0, c), Poly(0, Rational(1)));
  }
  return Element(target, x.num(), x.den());
}

Element representative(const Element& e, const RingPtr& parent) {
  if (same_ring(e.ring(), parent)) return e;
  if (e.num().nvars() == parent->nvars()) return Element(parent, e.num(), e.den());
  return coerce(e, parent);
}

namespace {

struct PF {
  Poly n, d;
};

class ElementParser {
 public:
  ElementParser(const RingPtr& ring, const std::string& text) : ring_(ring), s_(text) {}

  Element run() {
    PF v = expr();
    skip();
    if (i_ != s_.size()) fail("unexpected '" + std::string(1, s_[i_]) + "'");
    return Element(ring_, v.n, v.d);
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw std::invalid_argument("cannot parse '" + s_ + "' at column " + std::to_string(i_ + 1) + ": " + msg);
  }
  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  bool eat(char c) {
    skip();
    if (i_ < s_.size() && s_[i_] == c) {
      ++i_;
      return true;
    }
    return false;
  }
  PF constant(const Rational& r) const {
    return {Poly(ring_->nvars(), r), Poly(ring_->nvars(), Rational(1))};
  }
  static PF add(const PF& a, const PF& b) {
    if (a.d == b.d) return {a.n + b.n, a.d};
    return {a.n * b.d + b.n * a.d, a.d * b.d};
  }
  static PF mul(const PF& a, const PF& b) { return {a.n * b.n, a.d * b.d}; }
  PF div(const PF& a, const PF& b) const {
    if (b.n.is_zero()) fail("division by zero");
    return {a.n * b.d, a.d * b.n};
  }
  PF expr() {
    PF v = term();
    for (;;) {
      if (eat('+')) {
        v = add(v, term());
      } else if (eat('-')) {
        PF t = term();
        v = add(v, {-t.n, t.d});
      } else {
        return v;
      }
    }
  }
  PF term() {
    PF v = unary();
    for (;;) {
      if (eat('*')) {
        v = mul(v, unary());
      } else if (eat('/')) {
        v = div(v, unary());
      } else {
        return v;
      }
    }
  }
  PF unary() {
    if (eat('-')) {
      PF v = unary();
      return {-v.n, v.d};
    }
    if (eat('+')) return unary();
    return pow();
  }
  long exponent() {
    bool neg = eat('-');
    skip();
    std::size_t start = i_;
    while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
    if (start == i_) fail("expected integer exponent");
    long e = std::stol(s_.substr(start, i_ - start));
    return neg ? -e : e;
  }
  PF pow() {
    PF base = atom();
    if (!eat('^')) return base;
    bool paren = eat('(');
    long e = exponent();
    if (paren && !eat(')')) fail("expected ')'");
    PF result = constant(1);
    PF b = base;
    if (e < 0) {
      b = div(constant(1), base);
      e = -e;
    }
    for (long k = 0; k < e; ++k) result = mul(result, b);
    return result;
  }
  PF atom() {
    skip();
    if (i_ >= s_.size()) fail("unexpected end of input");
    char c = s_[i_];
    if (c == '(') {
      ++i_;
      PF v = expr();
      if (!eat(')')) fail("expected ')'");
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = i_;
      while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
      return constant(Rational(Integer(s_.substr(start, i_ - start))));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = i_;
      while (i_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_')) ++i_;
      std::string name = s_.substr(start, i_ - start);
      auto idx = ring_->variable_index(name);
      if (idx == Poly::npos) fail("unknown variable '" + name + "' for " + ring_->describe());
      return {Poly::variable(ring_->nvars(), idx), Poly(ring_->nvars(), Rational(1))};
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  RingPtr ring_;
  std::string s_;
  std::size_t i_ = 0;
};

}  // namespace

Element parse_element(const RingPtr& ring, const std::string& text) {
  return ElementParser(ring, text).run();
}

}  // namespace qord
