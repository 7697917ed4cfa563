#include <gtest/gtest.h>

#include "qord/baer_krull.hpp"
#include "qord/sample.hpp"

using namespace qord;

namespace {

std::vector<Element> pool_for(const RingPtr& ring, const std::vector<Element>& distinguished,
                              std::size_t count = 200) {
  SampleSpec spec;
  spec.count = count;
  spec.distinguished = distinguished;
  return generate(ring, spec);
}

Sweep sweep(std::size_t budget = 500) {
  Sweep s;
  s.budget = budget;
  return s;
}

RingPtr QX() {
  return Ring::fraction(Ring::polynomial(Ring::rationals(), {"X"}));
}

std::string describe(const Findings& f) {
  const Finding* p = f.first_problem();
  if (!p) return "ok";
  return p->name + " " + format_witness(p->witness) + " " + p->detail;
}

QuasiOrderPtr trivial_qo(const RingPtr& field) {
  return from_valuation(trivial(field));
}

}  // namespace

TEST(BaerKrull, GammaDecomposition) {
  auto Q = Ring::rationals();
  BasisData b = basis_data(padic(2, Q));
  ASSERT_EQ(b.pis.size(), 1u);
  EXPECT_EQ(b.pis[0], Q->from_integer(2));
  const auto& v = *b.valuation;
  {
    auto x = parse_element(Q, "1/2"), y = Q->from_integer(4);
    GammaData g = gamma_data(b, x, y);
    EXPECT_EQ(g.gamma, Value::of(1));
    EXPECT_EQ(g.decomposition.index_set, std::vector<std::size_t>{0});
    EXPECT_EQ(g.decomposition.delta, Value::of(0));
    EXPECT_EQ(g.m, Q->from_integer(2));
    EXPECT_TRUE(v.in_units(x * g.m));
    EXPECT_TRUE(v.in_ideal(y * g.m));
  }
  {
    GammaData g = gamma_data(b, Q->one(), Q->one());
    EXPECT_EQ(g.gamma, Value::of(0));
    EXPECT_TRUE(g.decomposition.index_set.empty());
    EXPECT_EQ(g.m, Q->one());
  }
  {
    auto x = parse_element(Q, "1/32");
    GammaData g = gamma_data(b, x, Q->one());
    EXPECT_EQ(g.gamma, Value::of(5));
    EXPECT_EQ(g.decomposition.index_set, std::vector<std::size_t>{0});
    EXPECT_EQ(g.decomposition.delta, Value::of(2));
    EXPECT_EQ(g.a, Q->from_integer(4));
    EXPECT_EQ(g.m, Q->from_integer(32));
    EXPECT_TRUE(v(x * g.m).is_zero());
  }
  {
    GammaData g = gamma_data(b, Q->zero(), Q->from_integer(3));
    EXPECT_EQ(g.gamma, Value::of(0));
  }
  EXPECT_THROW(gamma_data(b, Q->zero(), Q->zero()), std::invalid_argument);
}

TEST(BaerKrull, BasisIsCheckedOnConstruction) {
  auto Q = Ring::rationals();
  EXPECT_THROW(basis_data(padic(2, Q), {Q->from_integer(4)}), std::invalid_argument);
  EXPECT_NO_THROW(basis_data(padic(2, Q), {parse_element(Q, "6/5")}));
  auto ZX = Ring::polynomial(Ring::integers(), {"X"});
  EXPECT_THROW(basis_data(degree_valuation(ZX)), PreconditionError);
  auto K = QX();
  BasisData d = basis_data(degree_valuation(K));
  EXPECT_EQ(d.pis[0].to_string(), "1/X");
  BasisData c = basis_data(composite(degree_valuation(K), padic(2, Ring::rationals())));
  ASSERT_EQ(c.pis.size(), 2u);
  EXPECT_EQ(c.pis[0].to_string(), "1/X");
  EXPECT_EQ(c.pis[1].to_string(), "2");
}

TEST(BaerKrull, LiftOfTrivialResidueIsValuationOrder) {
  auto Q = Ring::rationals();
  auto v = padic(2, Q);
  BasisData b = basis_data(v);
  LiftData d = lift_data(b, {1}, trivial_qo(v->residue->target));
  auto l = lift(d);
  EXPECT_TRUE(agreement("agree", *l, *from_valuation(v), pool_for(Q, {}), sweep(1000)).ok());
  EXPECT_EQ(classify_qo(*l), QoClass::proper);
  EXPECT_THROW(lift_data(b, {-1}, trivial_qo(v->residue->target)), PreconditionError);
  EXPECT_THROW(lift_data(b, {1, 1}, trivial_qo(v->residue->target)), PreconditionError);
  EXPECT_THROW(lift_data(b, {1}, from_sign_order(sign_standard(Q))), PreconditionError);
}

TEST(BaerKrull, LiftOfStandardOrderOverDegree) {
  auto K = QX();
  auto Q = Ring::rationals();
  BasisData b = basis_data(degree_valuation(K));
  auto leq = from_sign_order(sign_standard(Q));
  auto plus = lift(lift_data(b, {1}, leq));
  auto minus = lift(lift_data(b, {-1}, leq));
  auto X = K->variable("X"), invX = parse_element(K, "1/X");
  for (const auto& c : pool_for(Q, {}, 300)) {
    if (c.as_rational() <= 0) continue;
    Element q = coerce(c, K);
    EXPECT_TRUE(plus->strict(K->zero(), invX));
    EXPECT_TRUE(plus->strict(invX, q)) << c.to_string();
    EXPECT_TRUE(plus->strict(q, X)) << c.to_string();
  }
  for (long n : {0L, 1L, 7L, 1000L, 1000000L}) EXPECT_TRUE(minus->strict(X, K->from_integer(-n)));
  auto pool = pool_for(K, {X, invX});
  Finding fp = agreement("plus", *plus, *from_sign_order(sign_at_infinity(K, 1)), pool, sweep(1000));
  EXPECT_TRUE(fp.ok()) << format_witness(fp.witness) << " " << fp.detail;
  Finding fm = agreement("minus", *minus, *from_sign_order(sign_at_infinity(K, -1)), pool, sweep(1000));
  EXPECT_TRUE(fm.ok()) << format_witness(fm.witness) << " " << fm.detail;
}

TEST(BaerKrull, DisplayedComparatorBreaksQR4ForOrders) {
  auto K = QX();
  BasisData b = basis_data(degree_valuation(K));
  LiftData d = lift_data(b, {1}, from_sign_order(sign_standard(Ring::rationals())));
  auto shown = lift_displayed(d);
  auto x = parse_element(K, "-8*X^2"), y = parse_element(K, "-8*X^2-2*X"), z = parse_element(K, "8*X^2");
  // Leading terms of x and y cancel, so the displayed rule makes them equivalent.
  EXPECT_TRUE(shown->sim(x, y));
  EXPECT_FALSE(shown->sim(z, y));
  EXPECT_FALSE(shown->le(x + z, y + z));
  auto fixed = lift(d);
  EXPECT_TRUE(fixed->strict(y, x));
  EXPECT_TRUE(check_qo_axioms(*fixed, pool_for(K, {x, y, z}), sweep(2000)).all_pass());
  // For a proper residue quasi-order the two rules coincide.
  LiftData p = lift_data(b, {1}, from_valuation(padic(2, Ring::rationals())));
  EXPECT_TRUE(agreement("same", *lift(p), *lift_displayed(p), pool_for(K, {x, y, z}), sweep()).ok());
}

TEST(BaerKrull, ExtractEta) {
  auto K = QX();
  BasisData b = basis_data(degree_valuation(K));
  EXPECT_EQ(extract_eta(*from_sign_order(sign_at_infinity(K, 1)), b), (EtaVector{1}));
  EXPECT_EQ(extract_eta(*from_sign_order(sign_at_infinity(K, -1)), b), (EtaVector{-1}));
  EXPECT_EQ(extract_eta(*from_valuation(composite(b.valuation, padic(3, Ring::rationals()))), b), (EtaVector{1}));
  auto Q = Ring::rationals();
  BasisData b2 = basis_data(padic(2, Q));
  EXPECT_EQ(extract_eta(*from_valuation(padic(2, Q)), b2), (EtaVector{1}));
}

TEST(BaerKrull, Psi) {
  auto Q = Ring::rationals();
  auto v = padic(2, Q);
  BasisData b = basis_data(v);
  PsiResult p = psi(from_valuation(v), b, pool_for(Q, {}), sweep());
  EXPECT_EQ(p.eta, (EtaVector{1}));
  EXPECT_TRUE(p.admissible);
  auto F2 = v->residue->target;
  EXPECT_TRUE(agreement("res", *p.residue_qo, *trivial_qo(F2), {F2->zero(), F2->one()}, sweep()).ok());

  auto K = QX();
  BasisData bd = basis_data(degree_valuation(K));
  PsiResult r = psi(from_sign_order(sign_at_infinity(K, 1)), bd, pool_for(K, {}), sweep());
  EXPECT_EQ(r.eta, (EtaVector{1}));
  EXPECT_TRUE(agreement("res", *r.residue_qo, *from_sign_order(sign_standard(Q)), pool_for(Q, {}), sweep()).ok());
  EXPECT_THROW(psi(from_sign_order(sign_standard(Q)), b, pool_for(Q, {}), sweep()), PreconditionError);
}

TEST(BaerKrull, RoundTrips) {
  auto Q = Ring::rationals();
  auto K = QX();
  auto v2 = padic(2, Q);
  auto deg = degree_valuation(K);
  auto leq = from_sign_order(sign_standard(Q));
  std::vector<LiftData> data = {
      lift_data(basis_data(v2), {1}, trivial_qo(v2->residue->target)),
      lift_data(basis_data(deg), {1}, leq),
      lift_data(basis_data(deg), {-1}, leq),
      lift_data(basis_data(deg), {1}, from_valuation(v2)),
  };
  for (const auto& d : data) {
    auto pool = pool_for(d.basis.valuation->ring, {});
    Findings r = roundtrip_check(d, pool, sweep());
    EXPECT_TRUE(r.all_pass()) << describe(r);
    const Finding* res = r.find("roundtrip-residue");
    ASSERT_NE(res, nullptr);
    EXPECT_GE(res->samples_used, 500u);
    Findings props = lift_properties(d, pool, sweep(300));
    EXPECT_TRUE(props.all_pass()) << lift(d)->name << ": " << describe(props);
    Findings rec = reconstruct_check(lift(d), d.basis, pool, sweep());
    EXPECT_TRUE(rec.all_pass()) << describe(rec);
  }
}

TEST(BaerKrull, LiftedProperOrderIsComposite) {
  auto Q = Ring::rationals();
  auto K = QX();
  auto deg = degree_valuation(K);
  auto v2 = padic(2, Q);
  auto w = composite(deg, v2);
  auto l = lift(lift_data(basis_data(deg), {1}, from_valuation(v2)));
  auto pool = pool_for(K, {parse_element(K, "2*X"), parse_element(K, "X/2")});
  Finding f = agreement("composite", *l, *from_valuation(w), pool, sweep());
  EXPECT_TRUE(f.ok()) << format_witness(f.witness);
  EXPECT_GE(f.samples_used, 500u);
  Findings rec = reconstruct_check(from_valuation(w), basis_data(deg), pool, sweep());
  EXPECT_TRUE(rec.all_pass()) << describe(rec);
}

TEST(BaerKrull, TwoIndexBasis) {
  auto Q = Ring::rationals();
  auto K = QX();
  auto w = composite(degree_valuation(K), padic(3, Q));
  BasisData b = basis_data(w);
  // w(2/X) = (1, 0) and w(3) = (0, 1); gamma for (X/3, 1) is (1, 1).
  GammaData g = gamma_data(b, parse_element(K, "X/3"), K->one());
  EXPECT_EQ(g.gamma, Value({1, 1}));
  EXPECT_EQ(g.decomposition.index_set, (std::vector<std::size_t>{0, 1}));
  EXPECT_TRUE((*w)(parse_element(K, "X/3") * g.m).is_zero());
  LiftData d = lift_data(b, {1, 1}, from_valuation(trivial(w->residue->target)));
  auto pool = pool_for(K, {parse_element(K, "3*X"), parse_element(K, "X/3")});
  Findings r = roundtrip_check(d, pool, sweep());
  EXPECT_TRUE(r.all_pass()) << describe(r);
  EXPECT_TRUE(agreement("self", *lift(d), *from_valuation(w), pool, sweep()).ok());
  EXPECT_THROW(lift_data(b, {1, -1}, from_valuation(trivial(w->residue->target))), PreconditionError);
}

TEST(BaerKrull, Injectivity) {
  auto Q = Ring::rationals();
  auto K = QX();
  BasisData b = basis_data(degree_valuation(K));
  auto leq = from_sign_order(sign_standard(Q));
  auto pool = pool_for(K, {});
  Finding f = injectivity_check(lift_data(b, {1}, leq), lift_data(b, {-1}, leq), pool, sweep());
  EXPECT_TRUE(f.ok()) << f.detail;
  Finding g = injectivity_check(lift_data(b, {1}, leq), lift_data(b, {1}, from_valuation(padic(2, Q))), pool, sweep());
  EXPECT_TRUE(g.ok()) << g.detail;
  Finding same = injectivity_check(lift_data(b, {1}, leq), lift_data(b, {1}, leq), pool, sweep());
  EXPECT_FALSE(same.ok());
}

TEST(BaerKrull, RingLevelLift) {
  auto Z = Ring::integers();
  {
    auto v = padic(2, Z);
    auto pool = pool_for(Z, {});
    RingLift r = bk3_lift(v, {1}, from_valuation(trivial(frac_extend_val(v)->residue->target)), pool, sweep());
    EXPECT_TRUE(r.findings.all_pass()) << describe(r.findings);
    EXPECT_TRUE(agreement("agree", *r.order, *from_valuation(v), pool, sweep(1000)).ok());
    EXPECT_TRUE(check_qo_axioms(*r.order, pool, sweep()).all_pass());
  }
  {
    auto ZX = Ring::polynomial(Z, {"X"});
    auto v = degree_valuation(ZX);
    auto pool = pool_for(ZX, {});
    RingLift r = bk3_lift(v, {1}, from_sign_order(sign_standard(Ring::rationals())), pool, sweep());
    EXPECT_TRUE(r.findings.all_pass()) << describe(r.findings);
    EXPECT_TRUE(check_qo_axioms(*r.order, pool, sweep()).all_pass()) << describe(check_qo_axioms(*r.order, pool, sweep()));
    EXPECT_EQ(classify_qo(*r.order), QoClass::order);
    EXPECT_TRUE(r.order->strict(ZX->from_integer(1000000), ZX->variable("X")));
    // Restricting again along the identity changes nothing.
    auto again = restrict_qo(r.order, ZX, [](const Element& x) { return x; }, Ideal::zero(), "again");
    EXPECT_TRUE(agreement("idempotent", *again, *r.order, pool, sweep()).ok());
  }
}

TEST(BaerKrull, MuRestrict) {
  auto Z = Ring::integers();
  auto Q = Ring::rationals();
  {
    auto v = padic(5, Z);
    auto F5 = v->residue->target;
    auto fq = from_valuation(trivial(F5));
    auto mu = mu_restrict(fq, v, pool_for(Z, {}), sweep());
    ASSERT_TRUE(same_ring(mu->ring, F5));
    std::vector<Element> all;
    for (int i = 0; i < 5; ++i) all.push_back(F5->from_integer(i));
    EXPECT_TRUE(agreement("identity", *mu, *fq, all, sweep()).ok());
  }
  for (const auto& base : {Z, Q}) {
    auto R = Ring::polynomial(base, {"X"});
    auto v = degree_valuation(R);
    auto mu = mu_restrict(from_sign_order(sign_standard(Q)), v, pool_for(R, {}), sweep());
    ASSERT_TRUE(same_ring(mu->ring, base));
    EXPECT_TRUE(agreement("restricted", *mu, *from_sign_order(sign_standard(base)), pool_for(base, {}), sweep()).ok());
  }
}

TEST(BaerKrull, ManisTransfer) {
  auto K = QX();
  auto deg = degree_valuation(K);
  Finding f = manis_transfer_check(composite(deg, padic(2, Ring::rationals())), deg);
  EXPECT_TRUE(f.ok()) << f.detail;
  EXPECT_GT(f.samples_used, 0u);
}
