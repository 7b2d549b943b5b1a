#include "mzv/exact_arith.hpp"

#include <mutex>
#include <stdexcept>
#include <vector>

namespace mzv {

std::string to_string(const Rational& r) { return r.str(); }

Integer factorial(unsigned n) {
  Integer out = 1;
  for (unsigned i = 2; i <= n; ++i) out *= i;
  return out;
}

Integer binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  if (n - k < k) k = n - k;
  Integer out = 1;
  for (unsigned i = 1; i <= k; ++i) {
    out *= n - k + i;
    out /= i;  // exact: out is a binomial prefix
  }
  return out;
}

Integer multinomial(unsigned n, std::span<const unsigned> parts) {
  unsigned used = 0;
  Integer out = 1;
  for (unsigned p : parts) {
    if (p > n - used) throw std::invalid_argument("multinomial: parts exceed n");
    out *= binomial(n - used, p);
    used += p;
  }
  return out;
}

namespace {

struct BernoulliCache {
  std::mutex lock;
  // series[j] is the coefficient of x^j in x/(e^x - 1); values[j] = j! * series[j].
  std::vector<Rational> series;
  std::vector<Rational> values;
};

BernoulliCache& bernoulli_cache() {
  static BernoulliCache cache;
  return cache;
}

}  // namespace

Rational bernoulli(unsigned m) {
  auto& cache = bernoulli_cache();
  std::scoped_lock guard(cache.lock);
  if (cache.series.empty()) {
    cache.series.push_back(1);
    cache.values.push_back(1);
  }
  while (cache.values.size() <= m) {
    // Long division of 1 by (e^x - 1)/x = sum_i x^i/(i+1)!.
    const unsigned j = static_cast<unsigned>(cache.series.size());
    Rational cj = 0;
    for (unsigned i = 1; i <= j; ++i)
      cj -= cache.series[j - i] / Rational(factorial(i + 1));
    cache.series.push_back(cj);
    cache.values.push_back(cj * Rational(factorial(j)));
  }
  return cache.values[m];
}

}  // namespace mzv
