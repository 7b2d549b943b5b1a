#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mzv/closedform.hpp"
#include "mzv/verify.hpp"

#include <random>

using mzv::Composition;
using mzv::MultiSeries;
using mzv::Rational;
using mzv::UniSeries;

TEST_CASE("desingularized values") {
  CHECK(mzv::zeta_fkmt(Composition({0})) == Rational(-1, 2));
  CHECK(mzv::zeta_fkmt(Composition({1})) == Rational(-1, 6));
  CHECK(mzv::zeta_fkmt(Composition({2})) == 0);
  CHECK(mzv::zeta_fkmt(Composition({3})) == Rational(1, 30));
  CHECK(mzv::zeta_fkmt(Composition({0, 0})) == Rational(1, 4));
  CHECK(mzv::zeta_fkmt(Composition({1, 0})) == Rational(1, 12));
  CHECK(mzv::zeta_fkmt(Composition({0, 1})) == Rational(1, 6));
  CHECK(mzv::zeta_fkmt(Composition({1, 0, 0})) == Rational(-1, 24));
}

TEST_CASE("renormalized values") {
  CHECK(mzv::zeta_ems_closed(Composition({0})) == Rational(-1, 2));
  CHECK(mzv::zeta_ems_closed(Composition({1})) == Rational(-1, 12));
  CHECK(mzv::zeta_ems_closed(Composition({2})) == 0);
  CHECK(mzv::zeta_ems_closed(Composition({3})) == Rational(1, 120));
  CHECK(mzv::zeta_ems_closed(Composition({0, 0})) == Rational(1, 4));
  CHECK(mzv::zeta_ems_closed(Composition({1, 0})) == Rational(1, 24));
  CHECK(mzv::zeta_ems_closed(Composition({0, 1})) == Rational(1, 12));
  CHECK(mzv::zeta_ems_closed(Composition({0, 0, 0})) == Rational(-1, 8));
  CHECK(mzv::zeta_ems_closed(Composition({1, 0, 0})) == Rational(-1, 48));
}

TEST_CASE("depth-1 closed forms in terms of Bernoulli numbers") {
  for (int k = 0; k <= 20; ++k) {
    Rational b = mzv::bernoulli(static_cast<unsigned>(k) + 1);
    Rational sign = k % 2 ? -1 : 1;
    CHECK(mzv::zeta_fkmt(Composition({k})) == sign * b);
    CHECK(mzv::zeta_ems_closed(Composition({k})) == sign * b / Rational(k + 1));
  }
}

TEST_CASE("factor series match their Bernoulli expansions") {
  // ((1-s)e^s - 1)/(e^s - 1)^2 is the derivative of s/(e^s - 1), so its
  // coefficients are B_{v+1}/v!; the renormalized factor divides by v+1 more.
  UniSeries f = mzv::fkmt_factor(10);
  UniSeries e = mzv::ems_factor(10);
  for (int v = 0; v <= 10; ++v) {
    Rational b = mzv::bernoulli(static_cast<unsigned>(v) + 1);
    Rational fact(mzv::factorial(static_cast<unsigned>(v)));
    CHECK(f.coefficient(v) == b / fact);
    CHECK(e.coefficient(v) == b / (fact * Rational(v + 1)));
  }
}

TEST_CASE("generating function samples") {
  CHECK(mzv::gen_fkmt(1, 0).coefficient({0}) == Rational(-1, 2));
  CHECK(mzv::gen_fkmt(1, 2).coefficient({1}) == Rational(1, 6));
  CHECK(mzv::gen_fkmt(2, 0).coefficient({0, 0}) == Rational(1, 4));

  MultiSeries ems1 = mzv::gen_ems(1, 2);
  CHECK(ems1.coefficient({0}) == Rational(-1, 2));
  CHECK(ems1.coefficient({1}) == Rational(1, 12));
  CHECK(ems1.coefficient({2}) == 0);
  CHECK(mzv::gen_ems(2, 0).coefficient({0, 0}) == Rational(1, 4));

  CHECK(mzv::conversion_factor(1, 0).coefficient({0}) == 1);
  CHECK(mzv::conversion_factor(1, 2).coefficient({1}) == Rational(-1, 2));
  CHECK(mzv::conversion_factor(2, 0).coefficient({0, 0}) == 1);
}

TEST_CASE("variable negation") {
  MultiSeries ms(2, 3);
  ms.add_term({0, 0}, 7);
  ms.add_term({1, 0}, 1);
  ms.add_term({1, 2}, 1);
  MultiSeries neg = mzv::negate_vars(ms);
  CHECK(neg.coefficient({0, 0}) == 7);
  CHECK(neg.coefficient({1, 0}) == -1);
  CHECK(neg.coefficient({1, 2}) == -1);
}

TEST_CASE("reading zeta values back from the generating functions") {
  CHECK(mzv::coefficient_to_zeta(mzv::gen_ems(1, 4), Composition({0})) == Rational(-1, 2));
  CHECK(mzv::coefficient_to_zeta(mzv::gen_ems(1, 4), Composition({1})) == Rational(-1, 12));
  CHECK(mzv::coefficient_to_zeta(mzv::gen_fkmt(2, 4), Composition({0, 0})) == Rational(1, 4));
  for (int n = 1; n <= 2; ++n) {
    for (const Composition& ks : mzv::compositions_with_sum_at_most(n, 5)) {
      CHECK(mzv::coefficient_to_zeta(mzv::gen_ems(n, 5), ks) == mzv::zeta_ems_closed(ks));
      CHECK(mzv::coefficient_to_zeta(mzv::gen_fkmt(n, 5), ks) == mzv::zeta_fkmt(ks));
    }
  }
  CHECK_THROWS_AS((void)mzv::coefficient_to_zeta(mzv::gen_ems(1, 2), Composition({3})),
                  std::invalid_argument);
  CHECK_THROWS_AS((void)mzv::coefficient_to_zeta(mzv::gen_ems(1, 2), Composition({0, 0})),
                  std::invalid_argument);
}

TEST_CASE("generating functions agree with the closed forms at depth 3, degree 8") {
  MultiSeries ems = mzv::gen_ems(3, 8);
  MultiSeries fkmt = mzv::gen_fkmt(3, 8);
  for (const Composition& ks : mzv::compositions_with_sum_at_most(3, 8)) {
    CHECK(mzv::coefficient_to_zeta(ems, ks) == mzv::zeta_ems_closed(ks));
    CHECK(mzv::coefficient_to_zeta(fkmt, ks) == mzv::zeta_fkmt(ks));
  }
}

TEST_CASE("generating functions factorize at depths 2 and 3, degree 8") {
  CHECK(mzv::all_ok(mzv::verify_genfn_factorization(3, 8)));
}

TEST_CASE("prefix-split identity at depths 2 and 3") {
  CHECK(mzv::all_ok(mzv::verify_prefix_split(3, 6)));
}

TEST_CASE("every interleaved branch collapses to the one-step split") {
  for (const Composition& ks : mzv::compositions_with_sum_at_most(3, 4)) {
    CHECK(mzv::interleaved_split_check(ks, 2, 0));
    CHECK(mzv::interleaved_split_check(ks, 2, 1));
  }
  for (const Composition& ks : mzv::compositions_with_sum_at_most(4, 2)) {
    for (unsigned mask = 0; mask < 4; ++mask) CHECK(mzv::interleaved_split_check(ks, 2, mask));
    for (unsigned mask = 0; mask < 2; ++mask) CHECK(mzv::interleaved_split_check(ks, 3, mask));
  }
  CHECK_THROWS_AS((void)mzv::interleaved_split_check(Composition({1, 1}), 2, 0), std::invalid_argument);
}

TEST_CASE("averaged recurrence identity") {
  // Hand value at the origin: (2^2 - 1)(-1/8) = 3 * (-1/8) and the three
  // branch sums each contribute (-1/2)(1/4).
  CHECK(mzv::averaged_recurrence_check(Composition({0, 0, 0})));
  for (int n = 2; n <= 3; ++n)
    for (const Composition& ks : mzv::compositions_with_sum_at_most(n, 4))
      CHECK(mzv::averaged_recurrence_check(ks));
  for (const Composition& ks : mzv::compositions_with_sum_at_most(4, 2))
    CHECK(mzv::averaged_recurrence_check(ks));
}

TEST_CASE("recurrence identities on small compositions") {
  for (const auto& parts : {std::vector<int>{0, 0}, {1, 0}, {0, 1}, {1, 1}}) {
    CHECK(mzv::fkmt_recurrence_check(Composition(parts)));
    CHECK(mzv::ems_recurrence_check(Composition(parts)));
    CHECK(mzv::prefix_split_check(Composition(parts)));
  }
  CHECK_THROWS_AS((void)mzv::fkmt_recurrence_check(Composition({2})), std::invalid_argument);
}

TEST_CASE("recurrence pipeline equals the closed forms") {
  for (int n = 1; n <= 3; ++n) {
    for (const Composition& ks : mzv::compositions_with_sum_at_most(n, 4)) {
      CHECK(mzv::zeta_fkmt_recurrence(ks) == mzv::zeta_fkmt(ks));
      CHECK(mzv::zeta_ems_recurrence(ks) == mzv::zeta_ems_closed(ks));
    }
  }
}

TEST_CASE("operator chain on the depth-1 generating function") {
  CHECK(mzv::genfn_chain_check(std::vector<int>{0}, 4));
  CHECK(mzv::genfn_chain_check(std::vector<int>{1}, 4));
  CHECK(mzv::genfn_chain_check(std::vector<int>{0, 0}, 3));
  CHECK_THROWS_AS((void)mzv::genfn_chain_check(std::vector<int>{0}, 2), std::invalid_argument);
}

TEST_CASE("conversions between the two families") {
  CHECK(mzv::ems_from_fkmt(Composition({0})) == Rational(-1, 2));
  CHECK(mzv::ems_from_fkmt(Composition({1, 0})) == Rational(1, 24));
  CHECK(mzv::ems_from_fkmt(Composition({0, 0, 0})) == Rational(-1, 8));
  CHECK(mzv::fkmt_from_ems(Composition({0})) == Rational(-1, 2));
  CHECK(mzv::fkmt_from_ems(Composition({1})) == Rational(-1, 6));
  CHECK(mzv::fkmt_from_ems(Composition({0, 0})) == Rational(1, 4));
  CHECK_THROWS_AS((void)mzv::ems_from_fkmt(Composition({0, 0, 0, 0})), std::invalid_argument);
}

TEST_CASE("generating-function equivalence at small degree") {
  CHECK(mzv::all_ok(mzv::verify_equivalence(2, 6)));
}

TEST_CASE("depth-3 product identities") {
  // zeta(-a) zeta(-b,-c) expands like the depth-2 identity: the alternating
  // binomial runs over the depth-1 argument a.
  auto z = [](std::vector<int> parts) { return mzv::zeta_ems_closed(Composition(std::move(parts))); };
  for (int a = 0; a <= 2; ++a) {
    for (int b = 0; b <= 2; ++b) {
      for (int c = 0; c <= 2; ++c) {
        Rational lhs = z({a}) * z({b, c});
        Rational rhs = 0;
        if (c >= 1) {
          for (int k = 0; k <= a; ++k) {
            Rational term = Rational(mzv::binomial(static_cast<unsigned>(a), static_cast<unsigned>(k))) *
                            z({b, c + k, a - k});
            rhs += k % 2 ? Rational(-term) : term;
          }
        } else if (b >= 1) {
          for (int k = 0; k <= a; ++k) {
            Rational term = Rational(mzv::binomial(static_cast<unsigned>(a), static_cast<unsigned>(k))) *
                            z({b + k, a - k, 0});
            rhs += k % 2 ? Rational(-term) : term;
          }
        } else {
          rhs = z({a, 0, 0});
        }
        CHECK(lhs == rhs);
      }
    }
  }
}

TEST_CASE("series division round-trips") {
  std::mt19937 rng(7u);
  std::uniform_int_distribution<int> num(-4, 4), den(1, 4);
  for (int trial = 0; trial < 50; ++trial) {
    UniSeries a(8), b(8);
    for (int i = 0; i <= 8; ++i) {
      a.set_coefficient(i, Rational(num(rng), den(rng)));
      b.set_coefficient(i, Rational(num(rng), den(rng)));
    }
    if (b.coefficient(0) == 0) b.set_coefficient(0, 1);
    CHECK(a.divided_by(b) * b == a);
  }
  UniSeries zero_const(3);
  CHECK_THROWS_AS((void)UniSeries(3).divided_by(zero_const), std::invalid_argument);
}

TEST_CASE("multivariate series serialize to sorted records") {
  CHECK(mzv::gen_ems(1, 1).to_json() ==
        R"([{"exps":[0],"coef":"-1/2"},{"exps":[1],"coef":"1/12"}])");
}
