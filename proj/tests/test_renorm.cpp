#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mzv/closedform.hpp"
#include "mzv/renorm.hpp"
#include "mzv/verify.hpp"

using mzv::CharacterState;
using mzv::Composition;
using mzv::LaurentSeries;
using mzv::Rational;
using mzv::Word;

TEST_CASE("character values of the basic words") {
  LaurentSeries y = mzv::phi(Word("y"), 4);
  CHECK(y.valuation() == -1);
  CHECK(y.coefficient(-1) == -1);
  CHECK(y.coefficient(0) == Rational(-1, 2));
  CHECK(y.coefficient(1) == Rational(-1, 12));
  CHECK(y.coefficient(2) == 0);
  CHECK(y.precision() >= 4);

  LaurentSeries dy = mzv::phi(Word("dy"), 3);
  CHECK(dy.coefficient(-2) == 1);
  CHECK(dy.coefficient(-1) == 0);
  CHECK(dy.coefficient(0) == Rational(-1, 12));

  CHECK(mzv::phi(Word::unit(), 3) == LaurentSeries::one());
  // Words ending in d hit the constant with a derivative and vanish.
  CHECK(mzv::phi(Word("yd"), 3).is_zero());
  CHECK(mzv::phi(Word("d"), 3).is_zero());
}

TEST_CASE("birkhoff decomposition of the basic words") {
  CharacterState state(8);
  auto [minus_y, plus_y] = mzv::birkhoff(Word("y"), state);
  CHECK(minus_y == LaurentSeries::monomial(1, -1));
  CHECK(plus_y.constant_term() == Rational(-1, 2));
  CHECK(plus_y.coefficient(1) == Rational(-1, 12));

  auto [minus_dy, plus_dy] = mzv::birkhoff(Word("dy"), state);
  CHECK(minus_dy == LaurentSeries::monomial(-1, -2));
  CHECK(plus_dy.constant_term() == Rational(-1, 12));

  CHECK(state.phi_plus(Word("yy")).constant_term() == Rational(1, 4));
  CHECK(state.phi_minus(Word::unit()) == LaurentSeries::one());
  CHECK_THROWS_AS((void)mzv::birkhoff(Word("yd"), state), std::invalid_argument);
}

TEST_CASE("renormalized values through the Birkhoff pipeline") {
  CHECK(mzv::zeta_ems_birkhoff(Composition({0})) == Rational(-1, 2));
  CHECK(mzv::zeta_ems_birkhoff(Composition({1})) == Rational(-1, 12));
  CHECK(mzv::zeta_ems_birkhoff(Composition({1, 0})) == Rational(1, 24));
}

TEST_CASE("renormalized values through the coproduct-average pipeline") {
  CHECK(mzv::zeta_ems_lemma(Composition({0, 0})) == Rational(1, 4));
  CHECK(mzv::zeta_ems_lemma(Composition({1, 0})) == Rational(1, 24));
  CHECK(mzv::zeta_ems_lemma(Composition({0, 0, 0})) == Rational(-1, 8));
}

TEST_CASE("pipelines agree on small compositions") {
  CharacterState state(12);
  for (int n = 1; n <= 2; ++n) {
    for (const Composition& ks : mzv::compositions_with_sum_at_most(n, 4)) {
      Rational a = mzv::zeta_ems_birkhoff(ks, state);
      CHECK(a == mzv::zeta_ems_lemma(ks, state));
      CHECK(a == mzv::zeta_ems_closed(ks));
    }
  }
}

TEST_CASE("shuffle relation checks") {
  CharacterState state(12);
  CHECK(mzv::shuffle_relation_check(Word("y"), Word("y"), state));
  CHECK((state.phi_plus(Word("y")) * state.phi_plus(Word("y"))).constant_term() == Rational(1, 4));
  CHECK(mzv::shuffle_relation_check(Word("dy"), Word("y"), state));
  CHECK(mzv::zeta_ems_birkhoff(Composition({1}), state) * mzv::zeta_ems_birkhoff(Composition({0}), state) ==
        mzv::zeta_ems_birkhoff(Composition({1, 0}), state));
  for (const Word& w : mzv::admissible_words(3))
    CHECK(mzv::shuffle_relation_check(Word::unit(), w, state));
}

TEST_CASE("birkhoff factors have the right shape up to weight 8") {
  CHECK(mzv::all_ok(mzv::verify_birkhoff_shapes(8)));
}

TEST_CASE("character annihilates small relation-ideal generators") {
  CHECK(mzv::all_ok(mzv::verify_ideal_annihilation(2)));
}

TEST_CASE("precision plumbing") {
  CHECK_THROWS_AS(CharacterState(0), std::invalid_argument);
  CHECK_THROWS_AS((void)mzv::phi(Word("y"), 0), std::invalid_argument);
  CHECK(mzv::default_precision(Composition({1, 0})) == 7);
  // The default margin leaves the constant term resolvable even after every
  // multiplication and derivative.
  Composition deep({2, 2, 2});
  CharacterState state(mzv::default_precision(deep));
  CHECK(mzv::zeta_ems_birkhoff(deep, state) == mzv::zeta_ems_closed(deep));
}
