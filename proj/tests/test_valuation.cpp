#include <gtest/gtest.h>

#include "qord/sample.hpp"
#include "qord/valuation.hpp"

using namespace qord;

namespace {

// Exponent of p in n by repeated division.
long trial_division(Integer n, long p) {
  if (n < 0) n = -n;
  long e = 0;
  while (n % p == 0) {
    n /= p;
    ++e;
  }
  return e;
}

long padic_oracle(const Rational& r, long p) {
  return trial_division(r.get_num(), p) - trial_division(r.get_den(), p);
}

std::vector<Element> pool_for(const RingPtr& ring, const std::vector<Element>& distinguished, std::size_t count = 300) {
  SampleSpec spec;
  spec.count = count;
  spec.distinguished = distinguished;
  return generate(ring, spec);
}

Sweep big_sweep() {
  Sweep s;
  s.budget = 1000;
  return s;
}

RingPtr QX() {
  return Ring::fraction(Ring::polynomial(Ring::rationals(), {"X"}));
}

}  // namespace

TEST(Valuation, PadicMatchesTrialDivision) {
  auto Q = Ring::rationals();
  auto v = padic(2, Q);
  EXPECT_EQ((*v)(Q->from_integer(12)), Value::of(2));
  EXPECT_TRUE((*v)(Q->zero()).is_infinite());
  for (const auto& x : pool_for(Q, {}, 400)) {
    if (x.is_zero()) continue;
    EXPECT_EQ((*v)(x), Value::of(padic_oracle(x.as_rational(), 2))) << x.to_string();
  }
  EXPECT_EQ(classify_position(*v, parse_element(Q, "1/2")), Position::outside);
  EXPECT_EQ(classify_position(*v, Q->zero()), Position::in_support);
  EXPECT_EQ(classify_position(*v, Q->from_integer(3)), Position::in_units);
  EXPECT_EQ(classify_position(*v, Q->from_integer(4)), Position::in_ideal);
  EXPECT_EQ(v->preimage(Value::of(-3)).to_string(), "1/8");
  EXPECT_EQ(v->preimage(Value::of(0)).to_string(), "1");
}

TEST(Valuation, PadicOnIntegersIsNotManis) {
  auto v = padic(3, Ring::integers());
  EXPECT_FALSE(v->manis);
  EXPECT_THROW(v->preimage(Value::of(1)), std::logic_error);
  EXPECT_THROW(padic(4, Ring::integers()), std::invalid_argument);
}

TEST(Valuation, AxiomSuitesPass) {
  auto Z = Ring::integers(), Q = Ring::rationals();
  auto ZX = Ring::polynomial(Z, {"X"});
  auto QX1 = Ring::polynomial(Q, {"X"});
  auto ZXY = Ring::polynomial(Z, {"X", "Y"});
  std::vector<ValuationPtr> vs = {
      padic(2, Q),
      padic(3, Z),
      trivial(Z, Ideal::principal(2)),
      trivial(ZX, Ideal::variables({0})),
      gauss_extend(trivial(Z), ZX, {Value::of(-1)}),
      gauss_extend(padic(3, Q), QX1, {Value::of(1)}),
      gauss_extend(padic(3, Q), QX1, {Value::of(0)}),
      gauss_extend(trivial(Z), ZXY, {Value::of(1), Value::of(-1)}),
      degree_valuation(QX()),
      composite(degree_valuation(QX()), padic(2, Q)),
      frac_extend_val(gauss_extend(padic(3, Z), ZX, {Value::of(1)})),
  };
  for (const auto& v : vs) {
    auto pool = pool_for(v->ring, v->distinguished);
    auto f = check_val_axioms(*v, pool, big_sweep());
    EXPECT_TRUE(f.all_pass()) << v->name << ": " << f.first_problem()->name << " "
                              << format_witness(f.first_problem()->witness) << " " << f.first_problem()->detail;
  }
}

TEST(Valuation, PlantedV2Fault) {
  auto Q = Ring::rationals();
  auto good = padic(2, Q);
  Valuation bad = *good;
  bad.eval_fn = [good](const Element& x) { return x == x.ring()->one() ? Value::of(1) : (*good)(x); };
  auto f = check_val_axioms(bad, pool_for(Q, {}), Sweep{});
  ASSERT_NE(f.find("V2"), nullptr);
  EXPECT_EQ(f.find("V2")->status, Status::fail);
}

TEST(Valuation, ValminOnWitness) {
  auto Q = Ring::rationals();
  auto v = padic(2, Q);
  auto x = Q->from_integer(4), y = Q->from_integer(3);
  EXPECT_EQ((*v)(x + y), Value::of(0));
  EXPECT_EQ((*v)(x + y), min_value((*v)(x), (*v)(y)));
}

TEST(Valuation, GaussExamples) {
  auto Q = Ring::rationals();
  auto R = Ring::polynomial(Q, {"X"});
  auto v = gauss_extend(padic(3, Q), R, {Value::of(1)});
  auto w = gauss_extend(padic(3, Q), R, {Value::of(0)});
  auto X2 = parse_element(R, "X^2"), p = parse_element(R, "3");
  EXPECT_EQ((*w)(X2), Value::of(0));
  EXPECT_EQ((*w)(p), Value::of(1));
  EXPECT_EQ((*v)(X2), Value::of(2));
  EXPECT_EQ((*v)(p), Value::of(1));
  EXPECT_TRUE(v->manis);
  EXPECT_EQ((*v)(v->preimage(Value::of(-2))), Value::of(-2));

  auto Z = Ring::integers();
  auto ZXY = Ring::polynomial(Z, {"X", "Y"});
  auto e2 = gauss_extend(trivial(Z), ZXY, {Value::of(1), Value::of(-1)});
  EXPECT_EQ((*e2)(parse_element(ZXY, "Y")), Value::of(-1));
  EXPECT_EQ((*e2)(parse_element(ZXY, "X^2*Y")), Value::of(1));
  EXPECT_EQ(classify_position(*e2, parse_element(ZXY, "Y")), Position::outside);
  EXPECT_TRUE(e2->manis);

  auto ZX = Ring::polynomial(Z, {"X"});
  auto n1 = gauss_extend(trivial(Z), ZX, {Value::of(-1)});
  EXPECT_EQ((*n1)(parse_element(ZX, "X+1")), Value::of(-1));
  EXPECT_EQ((*n1)(ZX->one()), Value::of(0));
  EXPECT_FALSE(n1->manis);
}

// Gauss values agree with a direct minimum over the terms computed with the
// trial-division oracle.
TEST(Valuation, GaussMatchesTermMinimum) {
  auto Q = Ring::rationals();
  auto R = Ring::polynomial(Q, {"X"});
  auto v = gauss_extend(padic(3, Q), R, {Value::of(2)});
  for (const auto& f : pool_for(R, {})) {
    if (f.is_zero()) continue;
    long best = 1L << 40;
    for (const auto& [m, c] : f.num().terms()) best = std::min(best, padic_oracle(c, 3) + 2L * m[0]);
    EXPECT_EQ((*v)(f), Value::of(best)) << f.to_string();
  }
}

TEST(Valuation, DegreeValuation) {
  auto K = QX();
  auto d = degree_valuation(K);
  EXPECT_EQ(d->preimage(Value::of(1)).to_string(), "1/X");
  EXPECT_EQ((*d)(d->preimage(Value::of(1))), Value::of(1));
  EXPECT_EQ((*d)(parse_element(K, "(X^2+1)/(X^5-X)")), Value::of(3));
  EXPECT_EQ(d->residue->reduce(parse_element(K, "(2*X+1)/(3*X-7)")).to_string(), "2/3");
  EXPECT_EQ(d->residue->reduce(parse_element(K, "1/X")).to_string(), "0");
}

TEST(Valuation, FractionExtension) {
  auto Z = Ring::integers();
  auto nu = frac_extend_val(padic(5, Z));
  EXPECT_TRUE(nu->manis);
  EXPECT_EQ((*nu)(parse_element(nu->ring, "1/5")), Value::of(-1));

  auto QX1 = Ring::polynomial(Ring::rationals(), {"X"});
  auto deg = frac_extend_val(gauss_extend(trivial(Ring::rationals()), QX1, {Value::of(-1)}));
  EXPECT_EQ((*deg)(parse_element(deg->ring, "1/X")), Value::of(1));
  EXPECT_EQ((*deg)(parse_element(deg->ring, "7")), Value::of(0));

  // Generic path: Gauss(v3 on Z, +1) on Z[X], extended to Q(X).
  auto ZX = Ring::polynomial(Z, {"X"});
  auto g = gauss_extend(padic(3, Z), ZX, {Value::of(1)});
  auto ng = frac_extend_val(g);
  EXPECT_TRUE(ng->manis);
  EXPECT_EQ((*ng)(parse_element(ng->ring, "(X)/(3)")), Value::of(0));
  EXPECT_EQ((*ng)(parse_element(ng->ring, "(1/2*X+3/2)/(9)")), Value::of(-1));
  EXPECT_EQ((*ng)(ng->preimage(Value::of(-2))), Value::of(-2));
  // Restriction to Z[X] agrees with g.
  for (const auto& f : pool_for(ZX, {})) EXPECT_EQ((*ng)(coerce(f, ng->ring)), (*g)(f)) << f.to_string();
}

TEST(Valuation, CompositeAndQuotient) {
  auto K = QX();
  auto Q = Ring::rationals();
  auto deg = degree_valuation(K);
  auto w = composite(deg, padic(2, Q));
  EXPECT_EQ((*w)(parse_element(K, "2*X")), Value({Integer(-1), Integer(1)}));
  EXPECT_EQ((*w)(K->one()), Value({Integer(0), Integer(0)}));
  for (const auto& x : pool_for(K, w->distinguished)) {
    if (x.is_zero()) continue;
    EXPECT_EQ((*w)(x).coords()[0], (*deg)(x).coords()[0]);
  }
  auto q = quotient_val(w, deg);
  auto v2 = padic(2, Q);
  for (const auto& r : pool_for(Q, {}, 500)) EXPECT_EQ((*q)(r), (*v2)(r)) << r.to_string();
  auto qq = quotient_val(deg, deg);
  EXPECT_EQ(qq->group.rank(), 0u);
  EXPECT_EQ((*qq)(Q->from_integer(5)), Value::zero(0));
  EXPECT_TRUE(quotient_well_defined(*w, *deg, pool_for(K, w->distinguished), Sweep{}).all_pass());
  EXPECT_EQ(q->manis, w->manis);
}

TEST(Valuation, Coarsening) {
  auto Q = Ring::rationals();
  auto R = Ring::polynomial(Q, {"X"});
  auto v = gauss_extend(padic(3, Q), R, {Value::of(1)});
  auto w = gauss_extend(padic(3, Q), R, {Value::of(0)});
  auto rep = coarsening_check(*v, *w, pool_for(R, v->distinguished), Sweep{});
  EXPECT_FALSE(rep.coarsening);
  const Finding* f = rep.findings.first_problem();
  ASSERT_NE(f, nullptr);
  EXPECT_EQ(format_witness(f->witness), "X");
  EXPECT_NE(rep.findings.overall(), Status::hard_inconsistency);

  auto K = QX();
  auto deg = degree_valuation(K);
  auto comp = composite(deg, padic(2, Q));
  auto pool = pool_for(K, comp->distinguished);
  auto rc = coarsening_check(*deg, *comp, pool, Sweep{});
  EXPECT_TRUE(rc.coarsening);
  EXPECT_TRUE(rc.findings.all_pass());
  EXPECT_FALSE(coarsening_check(*comp, *deg, pool, Sweep{}).coarsening);

  auto t = trivial(K);
  EXPECT_TRUE(coarsening_check(*t, *deg, pool, Sweep{}).coarsening);
}

TEST(Valuation, Equivalence) {
  auto Q = Ring::rationals();
  auto a = padic(2, Q), b = padic(3, Q);
  std::vector<Element> d = a->distinguished;
  d.insert(d.end(), b->distinguished.begin(), b->distinguished.end());
  auto pool = pool_for(Q, d);
  EXPECT_TRUE(equivalent_check(*a, *a, pool, Sweep{}).ok());
  auto f = equivalent_check(*a, *b, pool, Sweep{});
  EXPECT_FALSE(f.ok());
  EXPECT_EQ(format_witness(f.witness), "(2, 3)");
  EXPECT_TRUE(equivalent_check(*a, *scaled(a, 2), pool, Sweep{}).ok());
}

TEST(Valuation, SamplePoolsLandInPlace) {
  auto Z = Ring::integers();
  auto ZXY = Ring::polynomial(Z, {"X", "Y"});
  auto v = gauss_extend(trivial(Z), ZXY, {Value::of(1), Value::of(-1)});
  auto pool = pool_for(ZXY, v->distinguished);
  for (const auto& x : ring_samples(*v, pool)) EXPECT_TRUE(v->in_ring(x));
  auto iv = ideal_samples(*v, pool);
  EXPECT_GT(iv.size(), pool.size() / 2);
  for (const auto& x : iv) EXPECT_TRUE(v->in_ideal(x));
}
