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

#include "qord/value_group.hpp"

#include <cctype>

namespace qord {

namespace {

void require_rank(const Value& a, const Value& b) {
  if (!a.is_infinite() && !b.is_infinite() && a.rank() != b.rank())
    throw GroupMismatch("value group mismatch: rank " + std::to_string(a.rank()) + " vs " +
                        std::to_string(b.rank()));
}

bool odd(const Integer& n) {
  return mpz_odd_p(n.get_mpz_t()) != 0;
}

}  // namespace

bool Value::is_zero() const {
  if (!finite_) return false;
  for (const auto& c : coords_)
    if (c != 0) return false;
  return true;
}

int Value::sign() const {
  if (!finite_) return 1;
  for (const auto& c : coords_)
    if (c != 0) return c > 0 ? 1 : -1;
  return 0;
}

std::string Value::to_string() const {
  if (!finite_) return "inf";
  if (coords_.empty()) return "0";
  if (coords_.size() == 1) return coords_[0].get_str();
  std::string s = "(";
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) s += ",";
    s += coords_[i].get_str();
  }
  return s + ")";
}

int compare(const Value& a, const Value& b) {
  if (a.is_infinite()) return b.is_infinite() ? 0 : 1;
  if (b.is_infinite()) return -1;
  require_rank(a, b);
  for (std::size_t i = 0; i < a.rank(); ++i) {
    int c = cmp(a.coords()[i], b.coords()[i]);
    if (c != 0) return c < 0 ? -1 : 1;
  }
  return 0;
}

Value operator+(const Value& a, const Value& b) {
  if (a.is_infinite() || b.is_infinite()) return Value::infinity();
  require_rank(a, b);
  std::vector<Integer> c(a.rank());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coords()[i] + b.coords()[i];
  return Value(std::move(c));
}

Value operator-(const Value& a) {
  if (a.is_infinite()) throw std::domain_error("negation of infinity");
  std::vector<Integer> c(a.rank());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = -a.coords()[i];
  return Value(std::move(c));
}

Value operator-(const Value& a, const Value& b) {
  return a + (-b);
}

Value scale(const Value& a, long k) {
  if (a.is_infinite()) return a;
  std::vector<Integer> c(a.rank());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coords()[i] * k;
  return Value(std::move(c));
}

const Value& min_value(const Value& a, const Value& b) {
  return compare(a, b) <= 0 ? a : b;
}

const Value& max_value(const Value& a, const Value& b) {
  return compare(a, b) >= 0 ? a : b;
}

Value parse_value(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s == "inf" || s == "infinity") return Value::infinity();
  std::vector<Integer> coords;
  auto read_int = [&](const std::string& tok) {
    if (tok.empty()) throw std::invalid_argument("bad value '" + text + "'");
    std::size_t start = (tok[0] == '-' || tok[0] == '+') ? 1 : 0;
    if (start == tok.size()) throw std::invalid_argument("bad value '" + text + "'");
    for (std::size_t i = start; i < tok.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(tok[i]))) throw std::invalid_argument("bad value '" + text + "'");
    coords.emplace_back(tok[0] == '+' ? tok.substr(1) : tok);
  };
  if (!s.empty() && s.front() == '(') {
    if (s.back() != ')') throw std::invalid_argument("bad value '" + text + "'");
    std::string body = s.substr(1, s.size() - 2);
    std::size_t pos = 0;
    while (pos <= body.size()) {
      auto comma = body.find(',', pos);
      if (comma == std::string::npos) comma = body.size();
      read_int(body.substr(pos, comma - pos));
      pos = comma + 1;
    }
    return Value(std::move(coords));
  }
  read_int(s);
  return Value(std::move(coords));
}

ValueGroup::ValueGroup(std::size_t k) : rank_(k) {
  for (std::size_t i = 0; i < k; ++i) basis_.push_back(unit(i));
}

Value ValueGroup::unit(std::size_t i) const {
  std::vector<Integer> c(rank_, 0);
  c.at(i) = 1;
  return Value(std::move(c));
}

ValueGroup ValueGroup::with_basis(std::size_t k, std::vector<Value> basis) {
  ValueGroup g(k);
  if (basis.size() != k) throw std::invalid_argument("basis must have one vector per coordinate");
  for (const auto& b : basis)
    if (b.is_infinite() || b.rank() != k) throw GroupMismatch("basis vector of wrong rank");
  g.basis_ = std::move(basis);
  // Independence modulo 2: every unit vector must decompose.
  for (std::size_t i = 0; i < k; ++i) g.mod2_decompose(g.unit(i));
  return g;
}

std::string ValueGroup::describe() const {
  if (rank_ == 0) return "trivial";
  if (rank_ == 1) return "Z";
  return "Z^" + std::to_string(rank_) + " lex";
}

Mod2Decomposition ValueGroup::mod2_decompose(const Value& gamma) const {
  if (gamma.is_infinite()) throw std::domain_error("cannot decompose infinity");
  if (gamma.rank() != rank_) throw GroupMismatch("value does not belong to " + describe());
  // Solve sum_i x_i * basis_i = gamma over F_2 by Gaussian elimination on
  // the augmented matrix whose columns are the basis vectors.
  const std::size_t k = rank_;
  std::vector<std::vector<int>> m(k, std::vector<int>(k + 1, 0));
  for (std::size_t r = 0; r < k; ++r) {
    for (std::size_t c = 0; c < k; ++c) m[r][c] = odd(basis_[c].coords()[r]) ? 1 : 0;
    m[r][k] = odd(gamma.coords()[r]) ? 1 : 0;
  }
  std::vector<std::size_t> pivot_col(k, k);
  std::size_t row = 0;
  for (std::size_t c = 0; c < k && row < k; ++c) {
    std::size_t p = row;
    while (p < k && m[p][c] == 0) ++p;
    if (p == k) continue;
    std::swap(m[p], m[row]);
    for (std::size_t r = 0; r < k; ++r)
      if (r != row && m[r][c])
        for (std::size_t j = 0; j <= k; ++j) m[r][j] ^= m[row][j];
    pivot_col[row] = c;
    ++row;
  }
  if (row < k) throw std::invalid_argument("basis is not independent modulo 2");
  Mod2Decomposition d{{}, Value::zero(k)};
  std::vector<int> x(k, 0);
  for (std::size_t r = 0; r < k; ++r) x[pivot_col[r]] = m[r][k];
  std::vector<Integer> rest = gamma.coords();
  for (std::size_t i = 0; i < k; ++i) {
    if (!x[i]) continue;
    d.index_set.push_back(i);
    for (std::size_t r = 0; r < k; ++r) rest[r] -= basis_[i].coords()[r];
  }
  for (auto& c : rest) {
    if (odd(c)) throw std::logic_error("mod 2 decomposition left an odd remainder");
    mpz_divexact_ui(c.get_mpz_t(), c.get_mpz_t(), 2);
  }
  d.delta = Value(std::move(rest));
  return d;
}

Value embed_value(const Value& v, std::size_t k) {
  if (v.is_infinite()) return v;
  if (v.rank() > k) throw GroupMismatch("cannot embed into a smaller group");
  std::vector<Integer> c(k - v.rank(), 0);
  c.insert(c.end(), v.coords().begin(), v.coords().end());
  return Value(std::move(c));
}

Value drop_leading(const Value& v, std::size_t n) {
  if (v.is_infinite()) return v;
  if (n > v.rank()) throw GroupMismatch("cannot drop more coordinates than the rank");
  return Value(std::vector<Integer>(v.coords().begin() + static_cast<long>(n), v.coords().end()));
}

}  // namespace qord
