#pragma once

#include "mzv/exact_arith.hpp"

#include <functional>
#include <map>
#include <string>
#include <vector>

namespace mzv {

// Dense univariate power series truncated beyond a degree cap: coefficients
// 0..degree_cap are correct, nothing is tracked above.
class UniSeries {
 public:
  explicit UniSeries(int degree_cap);
  UniSeries(int degree_cap, std::vector<Rational> coefficients);

  int degree_cap() const { return degree_cap_; }
  const Rational& coefficient(int i) const;
  void set_coefficient(int i, const Rational& c);

  friend UniSeries operator+(const UniSeries& a, const UniSeries& b);
  friend UniSeries operator-(const UniSeries& a, const UniSeries& b);
  friend UniSeries operator*(const UniSeries& a, const UniSeries& b);
  friend UniSeries operator*(const Rational& c, const UniSeries& a);

  // d^k/dx^k; the cap drops by k.
  UniSeries derivative(int k = 1) const;

  // Power-series division; requires a nonzero constant term in the divisor.
  UniSeries divided_by(const UniSeries& den) const;

  bool operator==(const UniSeries&) const = default;

 private:
  int degree_cap_;
  std::vector<Rational> coefficients_;  // size degree_cap_ + 1
};

// Multivariate power series in t_1..t_n over Rational, truncated at a total
// degree cap. No zero coefficients are stored.
class MultiSeries {
 public:
  MultiSeries(int nvars, int degree_cap);
  static MultiSeries constant(int nvars, int degree_cap, const Rational& c);

  int nvars() const { return nvars_; }
  int degree_cap() const { return degree_cap_; }
  const std::map<std::vector<int>, Rational>& terms() const { return terms_; }

  Rational coefficient(const std::vector<int>& exps) const;
  // Adds c t^exps; terms above the cap are discarded.
  void add_term(const std::vector<int>& exps, const Rational& c);

  friend MultiSeries operator+(const MultiSeries& a, const MultiSeries& b);
  friend MultiSeries operator-(const MultiSeries& a, const MultiSeries& b);
  // Truncating product; the result cap is the smaller of the two.
  friend MultiSeries operator*(const MultiSeries& a, const MultiSeries& b);

  // t_i -> -t_i for every variable.
  MultiSeries negated_vars() const;
  // Same series viewed in one more variable, with the new first variable
  // absent from every term.
  MultiSeries prepended_var() const;

  // Sorted list of {"exps": [...], "coef": "p/q"} records.
  std::string to_json() const;

  bool operator==(const MultiSeries&) const = default;

 private:
  int nvars_;
  int degree_cap_;
  std::map<std::vector<int>, Rational> terms_;
};

// Calls fn for every way of writing `total` as an ordered sum of `slots`
// non-negative parts, in lexicographic order.
void for_each_split(int total, int slots, const std::function<void(const std::vector<int>&)>& fn);

// f(t_{first_var+1} + ... + t_n) as an n-variable series (first_var is
// 0-based), truncated at `cap`: each power of the aggregate variable is
// re-expanded multinomially.
MultiSeries expand_tail_sum(const UniSeries& f, int nvars, int first_var, int cap);

}  // namespace mzv
