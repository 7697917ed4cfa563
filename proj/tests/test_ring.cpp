#include <gtest/gtest.h>

#include "qord/ring.hpp"
#include "qord/sample.hpp"

using namespace qord;

namespace {

// Evaluates a payload at a rational point; independent of ring arithmetic.
Rational eval_at(const Poly& p, const std::vector<Rational>& pt) {
  Rational s = 0;
  for (const auto& [m, c] : p.terms()) {
    Rational t = c;
    for (std::size_t i = 0; i < m.size(); ++i)
      for (std::uint32_t k = 0; k < m[i]; ++k) t *= pt[i];
    s += t;
  }
  return s;
}

Rational eval_at(const Element& e, const std::vector<Rational>& pt) {
  return eval_at(e.num(), pt) / eval_at(e.den(), pt);
}

}  // namespace

TEST(Ring, IntegerArithmetic) {
  auto Z = Ring::integers();
  auto a = Z->from_integer(12), b = Z->from_integer(-5);
  EXPECT_EQ((a + b).to_string(), "7");
  EXPECT_EQ((a * b).to_string(), "-60");
  EXPECT_THROW(divide(a, b), NotAMember);
  EXPECT_EQ(divide(a, Z->from_integer(4)).to_string(), "3");
}

TEST(Ring, RationalNormalForm) {
  auto Q = Ring::rationals();
  auto x = parse_element(Q, "6/-4");
  EXPECT_EQ(x.to_string(), "-3/2");
  EXPECT_EQ(parse_element(Q, "1/2 + 1/3").to_string(), "5/6");
}

TEST(Ring, FractionOfIntegersIsQ) {
  EXPECT_EQ(Ring::fraction(Ring::integers())->describe(), "Q");
}

TEST(Ring, PolynomialParsePrint) {
  auto R = Ring::polynomial(Ring::integers(), {"X"});
  auto p = parse_element(R, "3*X + X^2 + 5");
  EXPECT_EQ(p.to_string(), "X^2+3*X+5");
  EXPECT_EQ(parse_element(R, p.to_string()), p);
  EXPECT_THROW(parse_element(R, "X/2"), NotAMember);
}

TEST(Ring, QuotientByAllVariablesGivesBase) {
  auto R = Ring::polynomial(Ring::integers(), {"X", "Y"});
  auto q = Ring::quotient(R, Ideal::variables({0, 1}));
  EXPECT_EQ(q->describe(), "Z");
  auto x = quotient_reduce(parse_element(R, "X^2+3*X+5"), Ideal::variables({0, 1}));
  EXPECT_EQ(x.ring()->describe(), "Z");
  EXPECT_EQ(x.to_string(), "5");
}

TEST(Ring, PartialQuotientReduces) {
  auto R = Ring::polynomial(Ring::integers(), {"X", "Y"});
  auto q = Ring::quotient(R, Ideal::variables({0}));
  auto x = quotient_reduce(parse_element(R, "X*Y + Y^2 + 2*X + 3"), Ideal::variables({0}));
  EXPECT_TRUE(same_ring(x.ring(), q));
  EXPECT_EQ(x.to_string(), "Y^2+3");
}

TEST(Ring, PrimeField) {
  auto F = Ring::quotient(Ring::integers(), Ideal::principal(5));
  EXPECT_EQ(F->from_integer(17).to_string(), "2");
  EXPECT_EQ(divide(F->one(), F->from_integer(2)).to_string(), "3");
  EXPECT_EQ(coerce(parse_element(Ring::rationals(), "1/3"), F).to_string(), "2");
  EXPECT_THROW(Ring::quotient(Ring::integers(), Ideal::principal(6)), std::invalid_argument);
}

TEST(Ring, RationalFunctionsCancel) {
  auto K = Ring::fraction(Ring::polynomial(Ring::rationals(), {"X"}));
  auto f = parse_element(K, "(X^2-1)/(2*X-2)");
  EXPECT_EQ(f.to_string(), "1/2*X+1/2");
  auto g = parse_element(K, "(X+1)/(X^2)");
  EXPECT_EQ(g.to_string(), "(X+1)/X^2");
  EXPECT_EQ(parse_element(K, g.to_string()), g);
  EXPECT_EQ(parse_element(K, "(-X)/(-3*X^2+1)").to_string(), "X/(3*X^2-1)");
}

TEST(Ring, MultivariateFractionEqualityByCrossMultiplication) {
  auto K = Ring::fraction(Ring::polynomial(Ring::integers(), {"X", "Y"}));
  auto a = parse_element(K, "(X*Y + X)/(Y+1)");
  auto b = parse_element(K, "X");
  EXPECT_EQ(a, b);
}

TEST(Ring, RingMismatchThrows) {
  auto a = Ring::integers()->one();
  auto b = Ring::rationals()->one();
  EXPECT_THROW((void)(a + b), RingMismatch);
}

// Ring operations agree with evaluation at points.
TEST(Ring, ArithmeticMatchesEvaluationOracle) {
  auto K = Ring::fraction(Ring::polynomial(Ring::rationals(), {"X"}));
  auto R2 = Ring::polynomial(Ring::integers(), {"X", "Y"});
  for (const auto& ring : {K, R2}) {
    SampleSpec spec;
    spec.seed = 7;
    spec.count = 60;
    auto pool = generate(ring, spec);
    std::vector<std::vector<Rational>> points = {{Rational(3), Rational(-2)}, {Rational(7, 2), Rational(5)}};
    for (std::size_t i = 0; i + 1 < pool.size(); ++i) {
      const auto& x = pool[i];
      const auto& y = pool[i + 1];
      for (auto pt : points) {
        pt.resize(ring->nvars());
        if (eval_at(x.den(), pt) == 0 || eval_at(y.den(), pt) == 0) continue;
        EXPECT_EQ(eval_at(x + y, pt), eval_at(x, pt) + eval_at(y, pt));
        EXPECT_EQ(eval_at(x * y, pt), eval_at(x, pt) * eval_at(y, pt));
        EXPECT_EQ(eval_at(x - y, pt), eval_at(x, pt) - eval_at(y, pt));
      }
      EXPECT_EQ(parse_element(ring, x.to_string()), x);
    }
  }
}

TEST(Sampling, DeterministicAndForced) {
  auto R = Ring::polynomial(Ring::integers(), {"X"});
  SampleSpec spec;
  spec.seed = 42;
  spec.count = 10;
  spec.distinguished = {R->variable("X")};
  auto a = generate(R, spec), b = generate(R, spec);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ(a[i].to_string(), b[i].to_string());
  EXPECT_EQ(a[0].to_string(), "X");
  EXPECT_EQ(a[1].to_string(), "0");
  EXPECT_EQ(a[2].to_string(), "1");
  EXPECT_EQ(a[3].to_string(), "-1");
  EXPECT_GE(a.size(), 10u);
}

TEST(Sampling, RationalBounds) {
  auto Q = Ring::rationals();
  SampleSpec spec;
  spec.count = 10;
  spec.bounds.height = 5;
  spec.bounds.den_height = 5;
  for (const auto& x : generate(Q, spec)) {
    auto r = x.as_rational();
    EXPECT_LE(abs(r.get_num()), 5);
    EXPECT_LE(r.get_den(), 5);
  }
}
