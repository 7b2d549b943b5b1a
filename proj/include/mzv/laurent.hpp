#pragma once

#include "mzv/exact_arith.hpp"

#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace mzv {

// Thrown when a truncated series does not carry enough correct terms to
// answer the question asked of it.
class PrecisionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Truncated Laurent series over Rational in one variable z.
//
// coefficients()[i] is the coefficient of z^(valuation() + i). Every
// coefficient below precision() is correct; terms at or above it are unknown.
// precision() == kExact marks a series known at every order (a Laurent
// polynomial: a pole part, a constant, ...). Truncation is tracked in the
// value itself, never implicitly.
class LaurentSeries {
 public:
  static constexpr int kExact = std::numeric_limits<int>::max();

  LaurentSeries() : precision_(kExact) {}  // exact zero
  LaurentSeries(int valuation, std::vector<Rational> coefficients, int precision);

  static LaurentSeries zero(int precision) { return LaurentSeries(0, {}, precision); }
  static LaurentSeries constant(const Rational& c) { return monomial(c, 0); }
  static LaurentSeries one() { return constant(1); }
  static LaurentSeries monomial(const Rational& c, int exponent, int precision = kExact);

  // The expansion of e^z/(1 - e^z) = -1/z - 1/2 - z/12 + z^3/720 - ...,
  // correct below exponent `precision`. Requires precision >= 0.
  static LaurentSeries x(int precision);

  bool is_zero() const { return coefficients_.empty(); }
  bool exact() const { return precision_ == kExact; }
  int valuation() const { return valuation_; }
  int precision() const { return precision_; }
  const std::vector<Rational>& coefficients() const { return coefficients_; }

  // Coefficient of z^exponent; throws PrecisionError at or above precision().
  Rational coefficient(int exponent) const;

  LaurentSeries operator-() const;
  friend LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b);
  friend LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b);
  friend LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b);
  friend LaurentSeries operator*(const Rational& c, const LaurentSeries& a);
  LaurentSeries& operator+=(const LaurentSeries& o) { return *this = *this + o; }

  // Term-wise d/dz; finite precision drops by one.
  LaurentSeries derivative() const;

  // Minimal-subtraction projection: keeps exponents < 0. The result is an
  // exact polynomial in 1/z. Requires precision >= 0.
  LaurentSeries pole_part() const;

  // Complement of pole_part (exponents >= 0); keeps the input precision.
  // Requires precision >= 0.
  LaurentSeries regular_part() const;

  // Coefficient of z^0. Requires precision >= 1 and no pole terms; a pole
  // here means an upstream subtraction went wrong, so it is a logic error.
  Rational constant_term() const;

  // Equal on the window where both are defined (exponents below the smaller
  // precision).
  bool agrees_with(const LaurentSeries& other) const;

  bool operator==(const LaurentSeries& other) const = default;

  std::string to_string() const;

 private:
  void normalize();
  // Valuation with zero treated as "known zero up to precision".
  int effective_valuation() const { return is_zero() ? precision_ : valuation_; }

  int valuation_ = 0;
  std::vector<Rational> coefficients_;
  int precision_;
};

}  // namespace mzv
