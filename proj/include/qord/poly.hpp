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

#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace qord {

using Integer = mpz_class;
using Rational = mpq_class;

using Monomial = std::vector<std::uint32_t>;

/// Graded lexicographic order on exponent vectors.
struct MonomialLess {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

std::uint32_t total_degree(const Monomial& m);

/**
 * Sparse multivariate polynomial with rational coefficients.
 *
 * The number of variables is fixed at construction; zero coefficients are
 * never stored, so the zero polynomial has no terms.
 */
class Poly {
 public:
  using Terms = std::map<Monomial, Rational, MonomialLess>;

  explicit Poly(std::size_t nvars = 0);
  Poly(std::size_t nvars, const Rational& c);

  static Poly variable(std::size_t nvars, std::size_t index, std::uint32_t power = 1);
  static Poly monomial(std::size_t nvars, const Monomial& m, const Rational& c);

  std::size_t nvars() const { return nvars_; }
  const Terms& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Constant term (coefficient of the empty monomial).
  Rational constant_term() const;
  /// Leading term under the graded lexicographic order; requires nonzero.
  const Monomial& leading_monomial() const;
  const Rational& leading_coefficient() const;
  /// Lowest term under the graded lexicographic order; requires nonzero.
  const Rational& trailing_coefficient() const;
  std::uint32_t total_degree() const;
  std::uint32_t degree_in(std::size_t var) const;
  /// Smallest exponent of `var` over all terms.
  std::uint32_t order_in(std::size_t var) const;
  bool uses_variable(std::size_t var) const;
  bool has_integer_coefficients() const;

  void add_term(const Monomial& m, const Rational& c);

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Rational& c);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
  friend bool operator==(const Poly& a, const Poly& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

  Poly pow(std::uint32_t e) const;

  /// Sets the listed variables to zero.
  Poly substitute_zero(const std::vector<std::size_t>& vars) const;
  /// Re-indexes variables: new index of old variable i is map[i]; the
  /// result has `new_nvars` variables. Variables mapped to npos must not occur.
  Poly remap(std::size_t new_nvars, const std::vector<std::size_t>& map) const;

  /// Lowest common multiple of coefficient denominators.
  Integer denominator_lcm() const;
  /// Greatest common divisor of coefficient numerators.
  Integer numerator_gcd() const;

  /// Single variable used by this polynomial, or npos if constant or
  /// multivariate (see `is_univariate`).
  std::size_t sole_variable() const;

  std::string to_string(const std::vector<std::string>& names) const;

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

 private:
  std::size_t nvars_;
  Terms terms_;
};

/// True when both polynomials together mention at most one variable.
bool jointly_univariate(const Poly& a, const Poly& b, std::size_t* var);

/// Division with remainder in Q[x_var]; both polynomials may use only `var`.
void univariate_divmod(const Poly& a, const Poly& b, std::size_t var, Poly* q, Poly* r);

/// Monic gcd in Q[x_var].
Poly univariate_gcd(Poly a, Poly b, std::size_t var);

std::string rational_to_string(const Rational& r);

}  // namespace qord
