#include "mzv/laurent.hpp"

#include <algorithm>
#include <sstream>

namespace mzv {

namespace {

// Saturating x + y where kExact acts as +infinity.
int prec_add(int p, int delta) {
  if (p == LaurentSeries::kExact) return LaurentSeries::kExact;
  long long s = static_cast<long long>(p) + delta;
  if (s >= LaurentSeries::kExact) return LaurentSeries::kExact;
  if (s <= std::numeric_limits<int>::min()) throw std::overflow_error("laurent: precision underflow");
  return static_cast<int>(s);
}

}  // namespace

LaurentSeries::LaurentSeries(int valuation, std::vector<Rational> coefficients, int precision)
    : valuation_(valuation), coefficients_(std::move(coefficients)), precision_(precision) {
  normalize();
}

void LaurentSeries::normalize() {
  if (precision_ != kExact) {
    // Drop coefficients at or above the correctness window.
    long long count = static_cast<long long>(precision_) - valuation_;
    if (count < 0) count = 0;
    if (static_cast<long long>(coefficients_.size()) > count)
      coefficients_.resize(static_cast<std::size_t>(count));
  }
  std::size_t lead = 0;
  while (lead < coefficients_.size() && coefficients_[lead] == 0) ++lead;
  if (lead > 0) {
    coefficients_.erase(coefficients_.begin(), coefficients_.begin() + static_cast<long>(lead));
    valuation_ += static_cast<int>(lead);
  }
  while (!coefficients_.empty() && coefficients_.back() == 0) coefficients_.pop_back();
  if (coefficients_.empty()) valuation_ = 0;
}

LaurentSeries LaurentSeries::monomial(const Rational& c, int exponent, int precision) {
  return LaurentSeries(exponent, {c}, precision);
}

LaurentSeries LaurentSeries::x(int precision) {
  if (precision < 0) throw std::invalid_argument("x(z): precision must be >= 0");
  std::vector<Rational> coeffs;
  coeffs.reserve(static_cast<std::size_t>(precision) + 1);
  Rational sign = 1;  // (-1)^m
  for (int m = 0; m <= precision; ++m) {
    coeffs.push_back(-sign * bernoulli(static_cast<unsigned>(m)) / Rational(factorial(static_cast<unsigned>(m))));
    sign = -sign;
  }
  return LaurentSeries(-1, std::move(coeffs), precision);
}

Rational LaurentSeries::coefficient(int exponent) const {
  if (precision_ != kExact && exponent >= precision_)
    throw PrecisionError("coefficient beyond tracked precision");
  if (is_zero() || exponent < valuation_) return 0;
  long long idx = static_cast<long long>(exponent) - valuation_;
  if (idx >= static_cast<long long>(coefficients_.size())) return 0;
  return coefficients_[static_cast<std::size_t>(idx)];
}

LaurentSeries LaurentSeries::operator-() const {
  std::vector<Rational> coeffs = coefficients_;
  for (auto& c : coeffs) c = -c;
  return LaurentSeries(valuation_, std::move(coeffs), precision_);
}

LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b) {
  int prec = std::min(a.precision_, b.precision_);
  if (a.is_zero() && b.is_zero()) return LaurentSeries::zero(prec);
  if (a.is_zero()) return LaurentSeries(b.valuation_, b.coefficients_, prec);
  if (b.is_zero()) return LaurentSeries(a.valuation_, a.coefficients_, prec);
  int val = std::min(a.valuation_, b.valuation_);
  long long top = std::max(a.valuation_ + static_cast<long long>(a.coefficients_.size()),
                           b.valuation_ + static_cast<long long>(b.coefficients_.size()));
  std::vector<Rational> coeffs(static_cast<std::size_t>(top - val), Rational(0));
  for (std::size_t i = 0; i < a.coefficients_.size(); ++i)
    coeffs[static_cast<std::size_t>(a.valuation_ - val) + i] += a.coefficients_[i];
  for (std::size_t i = 0; i < b.coefficients_.size(); ++i)
    coeffs[static_cast<std::size_t>(b.valuation_ - val) + i] += b.coefficients_[i];
  return LaurentSeries(val, std::move(coeffs), prec);
}

LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b) { return a + (-b); }

LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b) {
  // Cauchy product. Unknown tails limit the result:
  // prec = min(val(a) + prec(b), val(b) + prec(a)), with the valuation of a
  // tracked zero taken as its precision (nothing is known below it).
  int prec = std::min(prec_add(b.precision(), a.effective_valuation()),
                      prec_add(a.precision(), b.effective_valuation()));
  if (a.is_zero() || b.is_zero()) return LaurentSeries::zero(prec);
  int val = a.valuation() + b.valuation();
  long long top = static_cast<long long>(val) + static_cast<long long>(a.coefficients().size()) +
                  static_cast<long long>(b.coefficients().size()) - 1;
  if (prec != LaurentSeries::kExact) top = std::min(top, static_cast<long long>(prec));
  if (top <= val) return LaurentSeries::zero(prec);
  std::vector<Rational> coeffs(static_cast<std::size_t>(top - val), Rational(0));
  for (std::size_t i = 0; i < a.coefficients().size(); ++i) {
    if (a.coefficients()[i] == 0) continue;
    for (std::size_t j = 0; j < b.coefficients().size(); ++j) {
      long long e = static_cast<long long>(val) + static_cast<long long>(i) + static_cast<long long>(j);
      if (e >= top) break;
      coeffs[static_cast<std::size_t>(e - val)] += a.coefficients()[i] * b.coefficients()[j];
    }
  }
  return LaurentSeries(val, std::move(coeffs), prec);
}

LaurentSeries operator*(const Rational& c, const LaurentSeries& a) {
  if (c == 0) return a.exact() ? LaurentSeries() : LaurentSeries::zero(a.precision());
  std::vector<Rational> coeffs = a.coefficients();
  for (auto& v : coeffs) v *= c;
  return LaurentSeries(a.valuation(), std::move(coeffs), a.precision());
}

LaurentSeries LaurentSeries::derivative() const {
  int prec = exact() ? kExact : precision_ - 1;
  if (is_zero()) return zero(prec);
  std::vector<Rational> coeffs(coefficients_.size(), Rational(0));
  for (std::size_t i = 0; i < coefficients_.size(); ++i) {
    int e = valuation_ + static_cast<int>(i);
    coeffs[i] = Rational(e) * coefficients_[i];
  }
  return LaurentSeries(valuation_ - 1, std::move(coeffs), prec);
}

LaurentSeries LaurentSeries::pole_part() const {
  if (precision_ != kExact && precision_ < 0)
    throw PrecisionError("pole_part: negative exponents not fully resolved");
  std::vector<Rational> coeffs;
  for (std::size_t i = 0; i < coefficients_.size(); ++i) {
    if (valuation_ + static_cast<int>(i) >= 0) break;
    coeffs.push_back(coefficients_[i]);
  }
  return LaurentSeries(valuation_, std::move(coeffs), kExact);
}

LaurentSeries LaurentSeries::regular_part() const {
  if (precision_ != kExact && precision_ < 0)
    throw PrecisionError("regular_part: window does not reach exponent 0");
  if (is_zero() || valuation_ >= 0) return *this;
  std::vector<Rational> coeffs;
  for (std::size_t i = 0; i < coefficients_.size(); ++i)
    if (valuation_ + static_cast<int>(i) >= 0) coeffs.push_back(coefficients_[i]);
  return LaurentSeries(0, std::move(coeffs), precision_);
}

Rational LaurentSeries::constant_term() const {
  if (!is_zero() && valuation_ < 0)
    throw std::logic_error("constant_term: series still has a pole part");
  if (precision_ != kExact && precision_ < 1)
    throw PrecisionError("constant_term: coefficient of z^0 not resolved");
  return coefficient(0);
}

bool LaurentSeries::agrees_with(const LaurentSeries& other) const {
  long long prec = std::min(precision_, other.precision_);
  auto window_top = [prec](const LaurentSeries& s) {
    long long t = s.valuation_ + static_cast<long long>(s.coefficients_.size());
    return std::min(t, prec);
  };
  long long lo = std::min(effective_valuation() == kExact ? prec : valuation_,
                          other.effective_valuation() == kExact ? prec : other.valuation_);
  long long hi = std::max(window_top(*this), window_top(other));
  for (long long e = lo; e < hi; ++e)
    if (coefficient(static_cast<int>(e)) != other.coefficient(static_cast<int>(e))) return false;
  return true;
}

std::string LaurentSeries::to_string() const {
  std::ostringstream out;
  if (is_zero()) {
    out << "0";
  } else {
    for (std::size_t i = 0; i < coefficients_.size(); ++i) {
      if (coefficients_[i] == 0) continue;
      if (out.tellp() > 0) out << " + ";
      int e = valuation_ + static_cast<int>(i);
      out << mzv::to_string(coefficients_[i]);
      if (e == 1)
        out << "*z";
      else if (e != 0)
        out << "*z^" << e;
    }
  }
  if (precision_ != kExact) out << " (+O(z^" << precision_ << "))";
  return out.str();
}

}  // namespace mzv
