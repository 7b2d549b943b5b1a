#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mzv/exact_arith.hpp"

#include <random>
#include <thread>
#include <vector>

using mzv::Rational;

namespace {

// Independent oracle: Akiyama-Tanigawa transform, which produces the
// B_1 = +1/2 convention; flip odd indices to land on ours.
Rational bernoulli_oracle(unsigned n) {
  std::vector<Rational> a(n + 1);
  for (unsigned m = 0; m <= n; ++m) {
    a[m] = Rational(1, m + 1);
    for (unsigned j = m; j >= 1; --j) a[j - 1] = Rational(j) * (a[j - 1] - a[j]);
  }
  return n % 2 ? Rational(-a[0]) : a[0];
}

}  // namespace

TEST_CASE("bernoulli numbers match the stated small values") {
  CHECK(mzv::bernoulli(0) == Rational(1));
  CHECK(mzv::bernoulli(1) == Rational(-1, 2));
  CHECK(mzv::bernoulli(2) == Rational(1, 6));
  CHECK(mzv::bernoulli(4) == Rational(-1, 30));
  CHECK(mzv::bernoulli(12) == Rational(-691, 2730));
}

TEST_CASE("bernoulli numbers match the Akiyama-Tanigawa oracle") {
  for (unsigned m = 0; m <= 40; ++m) CHECK(mzv::bernoulli(m) == bernoulli_oracle(m));
}

TEST_CASE("odd bernoulli numbers vanish") {
  for (unsigned m = 1; m <= 20; ++m) CHECK(mzv::bernoulli(2 * m + 1) == 0);
}

TEST_CASE("bernoulli numbers satisfy the defining recursion") {
  for (unsigned m = 1; m <= 40; ++m) {
    Rational sum = 0;
    for (unsigned j = 0; j <= m; ++j) sum += Rational(mzv::binomial(m + 1, j)) * mzv::bernoulli(j);
    CHECK(sum == 0);
  }
}

TEST_CASE("bernoulli cache tolerates concurrent readers") {
  std::vector<std::thread> pool;
  std::vector<bool> results(8, false);
  for (std::size_t t = 0; t < results.size(); ++t) {
    pool.emplace_back([t, &results] {
      bool ok = true;
      for (unsigned m = 0; m <= 30; ++m) ok = ok && mzv::bernoulli(m) == bernoulli_oracle(m);
      results[t] = ok;
    });
  }
  for (auto& th : pool) th.join();
  for (bool ok : results) CHECK(ok);
}

TEST_CASE("binomial coefficients") {
  CHECK(mzv::binomial(4, 2) == 6);
  CHECK(mzv::binomial(3, 5) == 0);
  CHECK(mzv::binomial(0, 0) == 1);
  CHECK(mzv::binomial(30, 15) == mzv::Integer("155117520"));
}

TEST_CASE("multinomial coefficients") {
  const unsigned two_ones[] = {1u, 1u};
  const unsigned two_one[] = {2u, 1u};
  CHECK(mzv::multinomial(3, two_ones) == 6);
  CHECK(mzv::multinomial(2, {}) == 1);
  CHECK(mzv::multinomial(4, two_one) == 12);
  const unsigned too_big[] = {3u, 2u};
  CHECK_THROWS_AS((void)mzv::multinomial(4, too_big), std::invalid_argument);
}

TEST_CASE("rationals serialize as p/q or p") {
  CHECK(mzv::to_string(Rational(1, 2)) == "1/2");
  CHECK(mzv::to_string(Rational(-3, 6)) == "-1/2");
  CHECK(mzv::to_string(Rational(-4)) == "-4");
  CHECK(mzv::to_string(Rational(0)) == "0");
}

TEST_CASE("rational arithmetic is exact on random values") {
  std::mt19937 rng(20240817u);
  std::uniform_int_distribution<int> num(-1000, 1000);
  std::uniform_int_distribution<int> den(1, 1000);
  for (int trial = 0; trial < 200; ++trial) {
    Rational a(num(rng), den(rng)), b(num(rng), den(rng));
    CHECK((a + b) - b == a);
    if (b != 0) CHECK((a / b) * b == a);
  }
}
