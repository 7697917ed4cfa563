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

#include "qord/poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace qord {

std::uint32_t total_degree(const Monomial& m) {
  std::uint32_t d = 0;
  for (auto e : m) d += e;
  return d;
}

bool MonomialLess::operator()(const Monomial& a, const Monomial& b) const {
  auto da = total_degree(a), db = total_degree(b);
  if (da != db) return da < db;
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

Poly::Poly(std::size_t nvars) : nvars_(nvars) {}

Poly::Poly(std::size_t nvars, const Rational& c) : nvars_(nvars) {
  if (c != 0) terms_.emplace(Monomial(nvars, 0), c);
}

Poly Poly::variable(std::size_t nvars, std::size_t index, std::uint32_t power) {
  if (index >= nvars) throw std::out_of_range("variable index out of range");
  Monomial m(nvars, 0);
  m[index] = power;
  return monomial(nvars, m, Rational(1));
}

Poly Poly::monomial(std::size_t nvars, const Monomial& m, const Rational& c) {
  Poly p(nvars);
  p.add_term(m, c);
  return p;
}

bool Poly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && qord::total_degree(terms_.begin()->first) == 0);
}

Rational Poly::constant_term() const {
  auto it = terms_.find(Monomial(nvars_, 0));
  return it == terms_.end() ? Rational(0) : it->second;
}

const Monomial& Poly::leading_monomial() const {
  if (terms_.empty()) throw std::domain_error("leading term of zero polynomial");
  return terms_.rbegin()->first;
}

const Rational& Poly::leading_coefficient() const {
  if (terms_.empty()) throw std::domain_error("leading term of zero polynomial");
  return terms_.rbegin()->second;
}

const Rational& Poly::trailing_coefficient() const {
  if (terms_.empty()) throw std::domain_error("trailing term of zero polynomial");
  return terms_.begin()->second;
}

std::uint32_t Poly::total_degree() const {
  return terms_.empty() ? 0 : qord::total_degree(terms_.rbegin()->first);
}

std::uint32_t Poly::degree_in(std::size_t var) const {
  std::uint32_t d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m[var]);
  return d;
}

std::uint32_t Poly::order_in(std::size_t var) const {
  if (terms_.empty()) return 0;
  std::uint32_t d = UINT32_MAX;
  for (const auto& [m, c] : terms_) d = std::min(d, m[var]);
  return d;
}

bool Poly::uses_variable(std::size_t var) const {
  for (const auto& [m, c] : terms_)
    if (m[var] != 0) return true;
  return false;
}

bool Poly::has_integer_coefficients() const {
  for (const auto& [m, c] : terms_)
    if (c.get_den() != 1) return false;
  return true;
}

void Poly::add_term(const Monomial& m, const Rational& c) {
  if (m.size() != nvars_) throw std::invalid_argument("monomial arity mismatch");
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.nvars_ != nvars_) throw std::invalid_argument("polynomial arity mismatch");
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.nvars_ != nvars_) throw std::invalid_argument("polynomial arity mismatch");
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Poly& Poly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, k] : terms_) k *= c;
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.nvars_ != b.nvars_) throw std::invalid_argument("polynomial arity mismatch");
  Poly r(a.nvars_);
  Monomial m(a.nvars_);
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      for (std::size_t i = 0; i < m.size(); ++i) m[i] = ma[i] + mb[i];
      r.add_term(m, ca * cb);
    }
  }
  return r;
}

Poly Poly::pow(std::uint32_t e) const {
  Poly result(nvars_, Rational(1));
  Poly base = *this;
  while (e) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e) base = base * base;
  }
  return result;
}

Poly Poly::substitute_zero(const std::vector<std::size_t>& vars) const {
  Poly r(nvars_);
  for (const auto& [m, c] : terms_) {
    bool vanishes = false;
    for (auto v : vars)
      if (m[v] != 0) vanishes = true;
    if (!vanishes) r.add_term(m, c);
  }
  return r;
}

Poly Poly::remap(std::size_t new_nvars, const std::vector<std::size_t>& map) const {
  Poly r(new_nvars);
  Monomial nm(new_nvars);
  for (const auto& [m, c] : terms_) {
    std::fill(nm.begin(), nm.end(), 0);
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (m[i] == 0) continue;
      if (map[i] == npos) throw std::invalid_argument("variable has no image under remap");
      nm[map[i]] += m[i];
    }
    r.add_term(nm, c);
  }
  return r;
}

Integer Poly::denominator_lcm() const {
  Integer l = 1;
  for (const auto& [m, c] : terms_) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  return l;
}

Integer Poly::numerator_gcd() const {
  Integer g = 0;
  for (const auto& [m, c] : terms_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_num_mpz_t());
  return g;
}

std::size_t Poly::sole_variable() const {
  std::size_t found = npos;
  for (std::size_t v = 0; v < nvars_; ++v) {
    if (!uses_variable(v)) continue;
    if (found != npos) return npos;
    found = v;
  }
  return found;
}

std::string rational_to_string(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

std::string Poly::to_string(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    Rational mag = abs(c);
    bool negative = c < 0;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? "-" : "+";
    }
    first = false;
    bool constant = qord::total_degree(m) == 0;
    bool wrote = false;
    if (constant || mag != 1) {
      out += rational_to_string(mag);
      wrote = true;
    }
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      if (wrote) out += "*";
      out += names.at(i);
      if (m[i] > 1) out += "^" + std::to_string(m[i]);
      wrote = true;
    }
  }
  return out;
}

bool jointly_univariate(const Poly& a, const Poly& b, std::size_t* var) {
  std::size_t found = Poly::npos;
  for (std::size_t v = 0; v < a.nvars(); ++v) {
    if (!a.uses_variable(v) && !b.uses_variable(v)) continue;
    if (found != Poly::npos) return false;
    found = v;
  }
  *var = found;
  return true;
}

void univariate_divmod(const Poly& a, const Poly& b, std::size_t var, Poly* q, Poly* r) {
  if (b.is_zero()) throw std::domain_error("division by zero polynomial");
  const std::size_t n = a.nvars();
  *q = Poly(n);
  *r = a;
  const std::uint32_t db = b.degree_in(var);
  const Rational lb = b.leading_coefficient();
  while (!r->is_zero() && r->degree_in(var) >= db) {
    std::uint32_t dr = r->degree_in(var);
    Rational coef = r->leading_coefficient() / lb;
    Poly t(n);
    Monomial m(n, 0);
    m[var] = dr - db;
    t.add_term(m, coef);
    *q += t;
    *r -= t * b;
  }
}

Poly univariate_gcd(Poly a, Poly b, std::size_t var) {
  while (!b.is_zero()) {
    Poly q(a.nvars()), r(a.nvars());
    univariate_divmod(a, b, var, &q, &r);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.is_zero()) a *= Rational(1) / a.leading_coefficient();
  return a;
}

}  // namespace qord
