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

#include "qord/sample.hpp"

namespace qord {

Integer Rng::between(const Integer& lo, const Integer& hi) {
  Integer span = hi - lo + 1;
  if (span <= 0) return lo;
  if (span.fits_ulong_p()) return lo + Integer(static_cast<unsigned long>(below(span.get_ui())));
  Integer r = 0;
  for (int i = 0; i < 4; ++i) r = (r << 64) + Integer(static_cast<unsigned long>(engine_()));
  Integer m;
  mpz_fdiv_r(m.get_mpz_t(), r.get_mpz_t(), span.get_mpz_t());
  return lo + m;
}

namespace {

Integer nonzero(Rng& rng, const Integer& h) {
  Integer v = rng.between(1, h > 0 ? h : Integer(1));
  return rng.chance(1, 2) ? Integer(-v) : v;
}

Rational coefficient(Rng& rng, const Bounds& b, bool integral) {
  Integer n = nonzero(rng, b.height);
  if (integral || rng.chance(2, 3)) return Rational(n);
  Rational r(n, rng.between(1, b.den_height > 0 ? b.den_height : Integer(1)));
  r.canonicalize();
  return r;
}

Poly random_poly(std::size_t nvars, Rng& rng, const Bounds& b, bool integral, bool allow_zero) {
  Poly p(nvars);
  if (allow_zero && rng.chance(1, 12)) return p;
  if (nvars == 0 || rng.chance(1, 4)) return Poly(nvars, coefficient(rng, b, integral));
  const unsigned terms = 1 + static_cast<unsigned>(rng.below(b.terms ? b.terms : 1));
  for (unsigned t = 0; t < terms; ++t) {
    Monomial m(nvars);
    for (auto& e : m) e = static_cast<std::uint32_t>(rng.below(b.degree + 1));
    p.add_term(m, coefficient(rng, b, integral));
  }
  if (p.is_zero()) p = Poly(nvars, Rational(1));
  return p;
}

}  // namespace

Element random_element(const RingPtr& ring, Rng& rng, const Bounds& b) {
  const std::size_t n = ring->nvars();
  switch (ring->kind()) {
    case Ring::Kind::integers:
      return ring->from_integer(rng.between(-b.height, b.height));
    case Ring::Kind::rationals: {
      Rational r(rng.between(-b.height, b.height), rng.between(1, b.den_height > 0 ? b.den_height : Integer(1)));
      r.canonicalize();
      return ring->from_rational(r);
    }
    case Ring::Kind::polynomial:
      return Element(ring, random_poly(n, rng, b, ring->integral(), true));
    case Ring::Kind::quotient:
      if (ring->is_prime_field()) return ring->from_integer(rng.between(0, ring->characteristic() - 1));
      return Element(ring, random_poly(n, rng, b, ring->integral(), true));
    case Ring::Kind::fraction: {
      Poly num = random_poly(n, rng, b, true, true);
      Poly den = rng.chance(1, 3) ? Poly(n, Rational(1)) : random_poly(n, rng, b, true, false);
      for (int attempt = 0; attempt < 8 && ring->base()->payload_zero(den); ++attempt)
        den = random_poly(n, rng, b, true, false);
      if (ring->base()->payload_zero(den)) den = Poly(n, Rational(1));
      return Element(ring, num, den);
    }
  }
  throw std::logic_error("unreachable");
}

void merge_unique(std::vector<Element>& pool, const std::vector<Element>& extra) {
  for (const auto& e : extra) {
    bool present = false;
    for (const auto& p : pool)
      if (p == e) {
        present = true;
        break;
      }
    if (!present) pool.push_back(e);
  }
}

std::vector<Element> generate(const RingPtr& ring, const SampleSpec& spec) {
  std::vector<Element> out;
  std::vector<Element> forced;
  for (const auto& d : spec.distinguished) forced.push_back(coerce(d, ring));
  forced.push_back(ring->zero());
  forced.push_back(ring->one());
  forced.push_back(-ring->one());
  merge_unique(out, forced);
  Rng rng(spec.seed);
  for (std::size_t i = 0; i < spec.count; ++i) out.push_back(random_element(ring, rng, spec.bounds));
  return out;
}

}  // namespace qord
