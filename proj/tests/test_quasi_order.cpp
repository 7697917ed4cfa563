#include <gtest/gtest.h>

#include "qord/quasi_order.hpp"
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

Sweep big_sweep() {
  Sweep s;
  s.budget = 1000;
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

}  // namespace

TEST(QuasiOrder, ValuationInducedComparisons) {
  auto Q = Ring::rationals();
  auto q = from_valuation(padic(2, Q));
  EXPECT_EQ(qcmp(*q, Q->from_integer(4), Q->from_integer(2)), Cmp::less);
  EXPECT_EQ(qcmp(*q, Q->from_integer(3), Q->from_integer(5)), Cmp::equivalent);
  EXPECT_EQ(qcmp(*q, Q->from_integer(7), Q->from_integer(7)), Cmp::equivalent);
  for (const auto& x : pool_for(Q, {})) EXPECT_TRUE(q->le(Q->zero(), x));
  EXPECT_EQ(classify_qo(*q), QoClass::proper);
  EXPECT_TRUE(support_member(*q, Q->zero()));
  EXPECT_FALSE(support_member(*q, Q->one()));
}

TEST(QuasiOrder, ExampleOneComparison) {
  auto Q = Ring::rationals();
  auto R = Ring::polynomial(Q, {"X"});
  auto w = from_valuation(gauss_extend(padic(3, Q), R, {Value::of(0)}));
  auto p = R->from_integer(3), X2 = parse_element(R, "X^2");
  // w(X^2) = 0 <= w(p) = 1, so p lies below X^2.
  EXPECT_EQ(qcmp(*w, p, X2), Cmp::less);
  EXPECT_FALSE(w->le(X2, p));
  EXPECT_TRUE(w->le(R->zero(), p));
}

TEST(QuasiOrder, SignOrders) {
  auto Z = Ring::integers();
  auto zo = from_sign_order(sign_standard(Z));
  EXPECT_TRUE(zo->strict(Z->from_integer(-1), Z->zero()));
  EXPECT_TRUE(zo->strict(Z->zero(), Z->one()));
  EXPECT_EQ(classify_qo(*zo), QoClass::order);

  auto ZX = Ring::polynomial(Z, {"X"});
  auto f0 = from_sign_order(sign_at_origin(ZX));
  EXPECT_EQ(qcmp(*f0, ZX->variable("X"), ZX->zero()), Cmp::equivalent);
  EXPECT_TRUE(f0->le(ZX->zero(), parse_element(ZX, "X+1")));
  EXPECT_TRUE(support_member(*f0, ZX->variable("X")));

  auto K = QX();
  auto inf = from_sign_order(sign_at_infinity(K, 1));
  auto X = K->variable("X");
  for (long n = -50; n <= 1000000; n = n < 100 ? n + 7 : n * 10) EXPECT_TRUE(inf->strict(K->from_integer(n), X));
  auto minf = from_sign_order(sign_at_infinity(K, -1));
  EXPECT_TRUE(minf->strict(X, K->from_integer(-1000)));
  auto zp = from_sign_order(sign_at_zero_plus(K));
  EXPECT_TRUE(zp->strict(K->zero(), X));
  EXPECT_TRUE(zp->strict(X, parse_element(K, "1/1000")));
}

TEST(QuasiOrder, PlantedSignFaultFailsQR1) {
  auto Q = Ring::rationals();
  auto bad = from_sign_order(sign_flipped(Q));
  auto f = check_qo_axioms(*bad, pool_for(Q, {}), Sweep{});
  ASSERT_NE(f.find("QR1"), nullptr);
  EXPECT_EQ(f.find("QR1")->status, Status::fail);
  EXPECT_EQ(format_witness(f.find("QR1")->witness), "(0, 1)");
}

TEST(QuasiOrder, AxiomAndLemmaSuitesPass) {
  auto Z = Ring::integers(), Q = Ring::rationals();
  auto ZX = Ring::polynomial(Z, {"X"});
  auto ZXY = Ring::polynomial(Z, {"X", "Y"});
  auto QX1 = Ring::polynomial(Q, {"X"});
  auto K = QX();
  std::vector<QuasiOrderPtr> qs = {
      from_sign_order(sign_standard(Z)),
      from_sign_order(sign_standard(Q)),
      from_sign_order(sign_at_origin(ZX)),
      from_sign_order(sign_at_origin(ZXY)),
      from_sign_order(sign_at_infinity(K, 1)),
      from_sign_order(sign_at_infinity(K, -1)),
      from_sign_order(sign_at_zero_plus(K)),
      from_valuation(padic(2, Q)),
      from_valuation(padic(3, Z)),
      from_valuation(gauss_extend(padic(3, Q), QX1, {Value::of(0)})),
      from_valuation(trivial(Z, Ideal::principal(2))),
      from_valuation(composite(degree_valuation(K), padic(2, Q))),
      frac_extend_qo(from_sign_order(sign_at_origin(ZX))),
  };
  for (const auto& q : qs) {
    auto pool = pool_for(q->ring, q->distinguished);
    auto ax = check_qo_axioms(*q, pool, big_sweep());
    EXPECT_TRUE(ax.all_pass()) << q->name << ": " << describe(ax);
    auto lem = check_derived_lemmas(*q, pool, big_sweep());
    EXPECT_TRUE(lem.all_pass()) << q->name << ": " << describe(lem);
    EXPECT_EQ(lem.items.size(), 10u);
    EXPECT_TRUE(classify_check(*q).ok()) << q->name;
  }
}

TEST(QuasiOrder, SumBelowMaxGating) {
  auto Q = Ring::rationals();
  auto pool = pool_for(Q, {});
  auto lem = check_derived_lemmas(*from_sign_order(sign_standard(Q)), pool, Sweep{});
  EXPECT_EQ(lem.find("sum-below-max")->samples_used, 0u);
  auto lem2 = check_derived_lemmas(*from_valuation(padic(2, Q)), pool, Sweep{});
  EXPECT_GT(lem2.find("sum-below-max")->samples_used, 0u);
  EXPECT_TRUE(lem2.find("sum-below-max")->ok());
}

// Valuation-induced: x ~ y iff v(x) = v(y), checked against direct evaluation.
TEST(QuasiOrder, ValuationEquivalenceMatchesValues) {
  auto K = QX();
  auto v = composite(degree_valuation(K), padic(2, Ring::rationals()));
  auto q = from_valuation(v);
  auto pool = pool_for(K, v->distinguished);
  for (std::size_t i = 0; i + 1 < pool.size(); ++i)
    EXPECT_EQ(q->sim(pool[i], pool[i + 1]), (*v)(pool[i]) == (*v)(pool[i + 1]));
  for (long a = -3; a <= 3; ++a)
    for (long b = a; b <= 3; ++b) {
      Value g({Integer(a), Integer(1)}), d({Integer(b), Integer(-1)});
      if (g <= d) EXPECT_TRUE(q->le(v->preimage(d), v->preimage(g)));
    }
}

TEST(QuasiOrder, FractionExtension) {
  auto Z = Ring::integers();
  auto qz = from_sign_order(sign_standard(Z));
  auto qq = frac_extend_qo(qz);
  auto Q = Ring::rationals();
  EXPECT_TRUE(qq->le(parse_element(Q, "1/2"), parse_element(Q, "2/3")));
  EXPECT_FALSE(qq->le(parse_element(Q, "2/3"), parse_element(Q, "1/2")));
  auto pz = pool_for(Z, {});
  for (std::size_t i = 0; i + 1 < pz.size(); ++i)
    EXPECT_EQ(qq->le(coerce(pz[i], Q), coerce(pz[i + 1], Q)), qz->le(pz[i], pz[i + 1]));

  auto vp = from_valuation(padic(3, Z));
  auto ext = frac_extend_qo(vp);
  auto direct = from_valuation(padic(3, Q));
  auto pool = pool_for(Q, {Q->from_integer(3)}, 300);
  EXPECT_TRUE(agreement("frac-agree", *ext, *direct, pool, big_sweep()).ok());
  EXPECT_EQ(classify_qo(*ext), classify_qo(*vp));

  auto ZX = Ring::polynomial(Z, {"X"});
  auto f0 = frac_extend_qo(from_sign_order(sign_at_origin(ZX)));
  EXPECT_EQ(f0->ring->describe(), "Q");
  EXPECT_TRUE(agreement("f0-frac", *f0, *from_sign_order(sign_standard(Q)), pool, big_sweep()).ok());
}
