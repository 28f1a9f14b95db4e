#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "generators.hpp"
#include "windinv/laurent.hpp"

using namespace windinv;

namespace {

const LaurentPoly kOne(1);
const LaurentPoly kX = LaurentPoly::monomial(1, 0, 1);
const LaurentPoly kYInv = LaurentPoly::monomial(0, -1, 1);

LaurentPoly x_minus_1() { return kX - kOne; }

}  // namespace

TEST_CASE("ring basics") {
  CHECK((LaurentPoly(1) + LaurentPoly(-1)).is_zero());
  CHECK(x_minus_1() * x_minus_1() == LaurentPoly::parse("X^2 - 2*X + 1"));
  // (1 - 2(X-1)Y^-1)(1 + 2(X-1)Y^-1) = 1 - 4(X-1)^2 Y^-2
  const LaurentPoly a = kOne - LaurentPoly(2) * x_minus_1() * kYInv;
  const LaurentPoly b = kOne + LaurentPoly(2) * x_minus_1() * kYInv;
  const LaurentPoly expected =
      kOne - LaurentPoly(4) * x_minus_1() * x_minus_1() * LaurentPoly::monomial(0, -2, 1);
  CHECK(a * b == expected);
}

TEST_CASE("monomials") {
  CHECK(LaurentPoly::monomial(0, 0, 1) == kOne);
  CHECK(LaurentPoly::monomial(0, -1, 1) == kYInv);
  CHECK(LaurentPoly::monomial(1, 0, -2) == LaurentPoly(-2) * kX);
  CHECK(LaurentPoly::monomial(2, 3, 0).is_zero());
}

TEST_CASE("units are exactly the signed monomials") {
  CHECK(kYInv.is_unit());
  CHECK_FALSE((kOne + kX).is_unit());
  CHECK(LaurentPoly::monomial(1, -2, -1).is_unit());
  CHECK_FALSE(LaurentPoly::monomial(1, 0, 2).is_unit());
  CHECK_FALSE(LaurentPoly().is_unit());
  // Constructive inverse for random units.
  testgen::Rng rng(21);
  std::uniform_int_distribution<int> exp_dist(-5, 5);
  std::uniform_int_distribution<int> sign_dist(0, 1);
  for (int trial = 0; trial < 200; ++trial) {
    const LaurentPoly u =
        LaurentPoly::monomial(exp_dist(rng), exp_dist(rng), sign_dist(rng) ? 1 : -1);
    CHECK(u.is_unit());
    CHECK(u * unit_inverse(u) == kOne);
  }
  CHECK_THROWS_AS(unit_inverse(kOne + kX), std::domain_error);
}

TEST_CASE("exact evaluation") {
  const LaurentPoly p = kOne - LaurentPoly(2) * x_minus_1() * kYInv;
  CHECK(p.evaluate(Rational(1), Rational(1)) == Rational(1));
  CHECK(kYInv.evaluate(Rational(1), Rational(2)) == Rational(1, 2));
  CHECK(LaurentPoly().evaluate(Rational(5), Rational(7)) == Rational(0));
  // 1 - 2*(3-1)*(-1/2) = 3
  CHECK(p.evaluate(Rational(3), Rational(-2)) == Rational(3));
  CHECK_THROWS_AS(kX.evaluate(Rational(0), Rational(1)), std::domain_error);
}

TEST_CASE("geometric column satisfies (X-1) q_k = X^k - 1") {
  CHECK(geometric_column(0).is_zero());
  CHECK(geometric_column(2) == kOne + kX);
  CHECK(geometric_column(-1) == -LaurentPoly::monomial(-1, 0, 1));
  for (std::int64_t k = -20; k <= 20; ++k) {
    CHECK(x_minus_1() * geometric_column(k) == LaurentPoly::monomial(k, 0, 1) - kOne);
  }
}

TEST_CASE("ring axioms on random polynomials") {
  testgen::Rng rng(22);
  for (int trial = 0; trial < 300; ++trial) {
    const LaurentPoly p = testgen::random_laurent(rng);
    const LaurentPoly q = testgen::random_laurent(rng);
    const LaurentPoly r = testgen::random_laurent(rng);
    CHECK(p + q == q + p);
    CHECK(p * q == q * p);
    CHECK((p + q) + r == p + (q + r));
    CHECK((p * q) * r == p * (q * r));
    CHECK(p * (q + r) == p * q + p * r);
    CHECK((p - p).is_zero());
    CHECK(p * kOne == p);
  }
}

TEST_CASE("canonical printing and parsing") {
  const LaurentPoly p = kOne - LaurentPoly(2) * x_minus_1() * kYInv;
  // Terms in (j, i) ascending order.
  CHECK(p.str() == "2*Y^-1 - 2*X*Y^-1 + 1");
  CHECK(LaurentPoly::parse(p.str()) == p);
  CHECK(LaurentPoly::parse("1 - 2*X*Y^-1 + 2*Y^-1") == p);
  CHECK(LaurentPoly().str() == "0");
  CHECK(LaurentPoly::parse("0").is_zero());
  CHECK((-kX).str() == "-X");
  CHECK(LaurentPoly::parse("-X") == -kX);
  CHECK(LaurentPoly::parse("Y^2*3*Y^-2") == LaurentPoly(3));
  CHECK_THROWS_AS(LaurentPoly::parse("1 +"), ParseError);
  CHECK_THROWS_AS(LaurentPoly::parse("Z"), ParseError);
  testgen::Rng rng(23);
  for (int trial = 0; trial < 200; ++trial) {
    const LaurentPoly p2 = testgen::random_laurent(rng, 8, 6, 20);
    CHECK(LaurentPoly::parse(p2.str()) == p2);
  }
}

TEST_CASE("coefficient overflow raises instead of wrapping") {
  const std::int64_t big = 0x4000'0000'0000'0000LL;  // 2^62
  const LaurentPoly huge = LaurentPoly::monomial(0, 0, big);
  CHECK_THROWS_AS(huge + huge, OverflowError);
  CHECK_THROWS_AS(huge * LaurentPoly(4), OverflowError);
}
