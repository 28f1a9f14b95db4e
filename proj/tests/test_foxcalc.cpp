#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "generators.hpp"
#include "windinv/foxcalc.hpp"
#include "windinv/winding.hpp"

using namespace windinv;

namespace {

const Word kX = Word::generator(0);
const Word kY = Word::generator(1);
const LaurentPoly kOne(1);
const LaurentPoly kXm1 = LaurentPoly::monomial(1, 0, 1) - kOne;
const LaurentPoly kYm1 = LaurentPoly::monomial(0, 1, 1) - kOne;

GroupRingElement single(const Word& w, std::int64_t c) {
  GroupRingElement e;
  e.add_term(w, c);
  return e;
}

}  // namespace

TEST_CASE("fox derivative of the defining cases") {
  CHECK(fox_derivative(kX, Gen::x) == single(Word(), 1));
  CHECK(fox_derivative(kX, Gen::y).is_zero());
  CHECK(fox_derivative(invert(kX), Gen::x) == single(invert(kX), -1));
  // d[x,y]/dx = 1 - xyx^-1, d[x,y]/dy = x - [x,y]
  const Word c = commutator(kX, kY);
  GroupRingElement dx = single(Word(), 1);
  dx.add_term(parse_word("xyx^-1"), -1);
  CHECK(fox_derivative(c, Gen::x) == dx);
  GroupRingElement dy = single(kX, 1);
  dy.add_term(c, -1);
  CHECK(fox_derivative(c, Gen::y) == dy);
}

TEST_CASE("abelianization") {
  GroupRingElement e = single(Word(), 1);
  e.add_term(parse_word("xyx^-1"), -1);
  CHECK(abelianize(e) == kOne - LaurentPoly::monomial(0, 1, 1));  // 1 - Y
  CHECK(abelianize(single(Word(), 3)) == LaurentPoly(3));
  // Keys with equal exponent sums and cancelling coefficients vanish.
  GroupRingElement z = single(parse_word("xy"), 2);
  z.add_term(parse_word("yx"), -2);
  CHECK(abelianize(z).is_zero());
  CHECK(abelianize(GroupRingElement()).is_zero());
}

TEST_CASE("product rule on random words") {
  testgen::Rng rng(41);
  for (int trial = 0; trial < 300; ++trial) {
    const Word u = testgen::random_word_up_to(rng, 30);
    const Word v = testgen::random_word_up_to(rng, 30);
    for (Gen g : {Gen::x, Gen::y}) {
      CHECK(fox_derivative(multiply(u, v), g) ==
            fox_derivative(u, g) + left_mul(u, fox_derivative(v, g)));
    }
  }
}

TEST_CASE("fundamental identity on random words") {
  CHECK(fundamental_identity_check(Word()));
  const Presentation q = exotic_zz_presentation();
  CHECK(fundamental_identity_check(q.relators[0]));
  testgen::Rng rng(42);
  for (int trial = 0; trial < 500; ++trial) {
    CHECK(fundamental_identity_check(testgen::random_word_up_to(rng, 50)));
  }
}

TEST_CASE("derivatives factor through the winding invariant on the commutator subgroup") {
  testgen::Rng rng(43);
  for (int trial = 0; trial < 300; ++trial) {
    const Word w = testgen::random_commutator_word(rng);
    const LaurentPoly p = winding_invariant(w);
    CHECK(abelianize(fox_derivative(w, Gen::x)) == -kYm1 * p);  // (1-Y) P_w
    CHECK(abelianize(fox_derivative(w, Gen::y)) == kXm1 * p);   // (X-1) P_w
  }
}

TEST_CASE("boundary matrices of the reference presentations") {
  const LaurentMatrix d2p = boundary_d2(standard_zz_presentation());
  CHECK(d2p.rows() == 2);
  CHECK(d2p.cols() == 2);
  CHECK(d2p.at(1, 1) == -kYm1);  // 1 - Y
  CHECK(d2p.at(1, 2).is_zero());
  CHECK(d2p.at(2, 1) == kXm1);
  CHECK(d2p.at(2, 2).is_zero());

  const Presentation q = exotic_zz_presentation();
  const LaurentMatrix d2q = boundary_d2(q);
  const LaurentPoly pr1 = winding_invariant(q.relators[0]);
  CHECK(d2q.at(1, 1) == -kYm1 * pr1);
  CHECK(d2q.at(1, 2) == kXm1 * kXm1 * (kOne - LaurentPoly::monomial(0, -1, 1)));
  CHECK(d2q.at(2, 1) == kXm1 * pr1);
  CHECK(d2q.at(2, 2) == -(kXm1 * kXm1 * kXm1 * LaurentPoly::monomial(0, -1, 1)));

  const LaurentMatrix single_x = boundary_d2(Presentation{2, {kX}});
  CHECK(single_x.cols() == 1);
  CHECK(single_x.at(1, 1).is_one());
  CHECK(single_x.at(2, 1).is_zero());

  CHECK_THROWS_AS(boundary_d2(Presentation{3, {}}), std::domain_error);
}

TEST_CASE("boundary equals the outer product with the lambda vector") {
  const std::vector<LaurentPoly> column{-kYm1, kXm1};
  for (const Presentation& t : {standard_zz_presentation(), exotic_zz_presentation()}) {
    CHECK(boundary_d2(t) == outer_product(column, lambda_vector(t)));
  }
  testgen::Rng rng(44);
  for (int trial = 0; trial < 100; ++trial) {
    Presentation t{2, {testgen::random_commutator_word(rng), testgen::random_commutator_word(rng)}};
    CHECK(boundary_d2(t) == outer_product(column, lambda_vector(t)));
  }
}
