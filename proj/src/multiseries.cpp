#include "mzv/multiseries.hpp"

#include <json.hpp>

#include <numeric>
#include <stdexcept>

namespace mzv {

UniSeries::UniSeries(int degree_cap) : degree_cap_(degree_cap) {
  if (degree_cap < 0) throw std::invalid_argument("uniseries: negative degree cap");
  coefficients_.resize(static_cast<std::size_t>(degree_cap) + 1, Rational(0));
}

UniSeries::UniSeries(int degree_cap, std::vector<Rational> coefficients) : UniSeries(degree_cap) {
  if (coefficients.size() > coefficients_.size())
    throw std::invalid_argument("uniseries: more coefficients than the cap allows");
  for (std::size_t i = 0; i < coefficients.size(); ++i) coefficients_[i] = std::move(coefficients[i]);
}

const Rational& UniSeries::coefficient(int i) const {
  if (i < 0 || i > degree_cap_) throw std::out_of_range("uniseries: coefficient outside cap");
  return coefficients_[static_cast<std::size_t>(i)];
}

void UniSeries::set_coefficient(int i, const Rational& c) {
  if (i < 0 || i > degree_cap_) throw std::out_of_range("uniseries: coefficient outside cap");
  coefficients_[static_cast<std::size_t>(i)] = c;
}

UniSeries operator+(const UniSeries& a, const UniSeries& b) {
  UniSeries out(std::min(a.degree_cap_, b.degree_cap_));
  for (int i = 0; i <= out.degree_cap_; ++i)
    out.coefficients_[static_cast<std::size_t>(i)] = a.coefficient(i) + b.coefficient(i);
  return out;
}

UniSeries operator-(const UniSeries& a, const UniSeries& b) {
  UniSeries out(std::min(a.degree_cap_, b.degree_cap_));
  for (int i = 0; i <= out.degree_cap_; ++i)
    out.coefficients_[static_cast<std::size_t>(i)] = a.coefficient(i) - b.coefficient(i);
  return out;
}

UniSeries operator*(const UniSeries& a, const UniSeries& b) {
  UniSeries out(std::min(a.degree_cap_, b.degree_cap_));
  for (int i = 0; i <= std::min(a.degree_cap_, out.degree_cap_); ++i) {
    if (a.coefficient(i) == 0) continue;
    for (int j = 0; i + j <= out.degree_cap_ && j <= b.degree_cap_; ++j)
      out.coefficients_[static_cast<std::size_t>(i + j)] += a.coefficient(i) * b.coefficient(j);
  }
  return out;
}

UniSeries operator*(const Rational& c, const UniSeries& a) {
  UniSeries out(a.degree_cap_);
  for (int i = 0; i <= a.degree_cap_; ++i) out.coefficients_[static_cast<std::size_t>(i)] = c * a.coefficient(i);
  return out;
}

UniSeries UniSeries::derivative(int k) const {
  if (k < 0) throw std::invalid_argument("uniseries: negative derivative order");
  if (k == 0) return *this;
  if (degree_cap_ < k) throw std::invalid_argument("uniseries: cap too small for derivative");
  UniSeries out(degree_cap_ - k);
  for (int i = 0; i <= out.degree_cap_; ++i) {
    Rational c = coefficients_[static_cast<std::size_t>(i + k)];
    for (int j = i + 1; j <= i + k; ++j) c *= j;
    out.coefficients_[static_cast<std::size_t>(i)] = c;
  }
  return out;
}

UniSeries UniSeries::divided_by(const UniSeries& den) const {
  if (den.coefficient(0) == 0) throw std::invalid_argument("uniseries: divisor has no unit constant term");
  UniSeries out(std::min(degree_cap_, den.degree_cap_));
  for (int n = 0; n <= out.degree_cap_; ++n) {
    Rational c = coefficient(n);
    for (int k = 1; k <= n; ++k) c -= den.coefficient(k) * out.coefficients_[static_cast<std::size_t>(n - k)];
    out.coefficients_[static_cast<std::size_t>(n)] = c / den.coefficient(0);
  }
  return out;
}

MultiSeries::MultiSeries(int nvars, int degree_cap) : nvars_(nvars), degree_cap_(degree_cap) {
  if (nvars < 1) throw std::invalid_argument("multiseries: needs at least one variable");
  if (degree_cap < 0) throw std::invalid_argument("multiseries: negative degree cap");
}

MultiSeries MultiSeries::constant(int nvars, int degree_cap, const Rational& c) {
  MultiSeries out(nvars, degree_cap);
  out.add_term(std::vector<int>(static_cast<std::size_t>(nvars), 0), c);
  return out;
}

namespace {

int total_degree(const std::vector<int>& exps) {
  return std::accumulate(exps.begin(), exps.end(), 0);
}

}  // namespace

Rational MultiSeries::coefficient(const std::vector<int>& exps) const {
  if (static_cast<int>(exps.size()) != nvars_) throw std::invalid_argument("multiseries: wrong exponent arity");
  if (total_degree(exps) > degree_cap_) throw std::out_of_range("multiseries: exponent beyond degree cap");
  auto it = terms_.find(exps);
  return it == terms_.end() ? Rational(0) : it->second;
}

void MultiSeries::add_term(const std::vector<int>& exps, const Rational& c) {
  if (static_cast<int>(exps.size()) != nvars_) throw std::invalid_argument("multiseries: wrong exponent arity");
  for (int e : exps)
    if (e < 0) throw std::invalid_argument("multiseries: negative exponent");
  if (c == 0 || total_degree(exps) > degree_cap_) return;
  auto [it, inserted] = terms_.try_emplace(exps, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

MultiSeries operator+(const MultiSeries& a, const MultiSeries& b) {
  if (a.nvars_ != b.nvars_) throw std::invalid_argument("multiseries: variable count mismatch");
  MultiSeries out(a.nvars_, std::min(a.degree_cap_, b.degree_cap_));
  for (const auto& [e, c] : a.terms_) out.add_term(e, c);
  for (const auto& [e, c] : b.terms_) out.add_term(e, c);
  return out;
}

MultiSeries operator-(const MultiSeries& a, const MultiSeries& b) {
  if (a.nvars_ != b.nvars_) throw std::invalid_argument("multiseries: variable count mismatch");
  MultiSeries out(a.nvars_, std::min(a.degree_cap_, b.degree_cap_));
  for (const auto& [e, c] : a.terms_) out.add_term(e, c);
  for (const auto& [e, c] : b.terms_) out.add_term(e, -c);
  return out;
}

MultiSeries operator*(const MultiSeries& a, const MultiSeries& b) {
  if (a.nvars_ != b.nvars_) throw std::invalid_argument("multiseries: variable count mismatch");
  MultiSeries out(a.nvars_, std::min(a.degree_cap_, b.degree_cap_));
  std::vector<int> exps(static_cast<std::size_t>(a.nvars_));
  for (const auto& [ea, ca] : a.terms_) {
    int da = total_degree(ea);
    for (const auto& [eb, cb] : b.terms_) {
      if (da + total_degree(eb) > out.degree_cap_) continue;
      for (std::size_t i = 0; i < exps.size(); ++i) exps[i] = ea[i] + eb[i];
      out.add_term(exps, ca * cb);
    }
  }
  return out;
}

MultiSeries MultiSeries::negated_vars() const {
  MultiSeries out(nvars_, degree_cap_);
  for (const auto& [e, c] : terms_) out.add_term(e, total_degree(e) % 2 == 0 ? c : -c);
  return out;
}

MultiSeries MultiSeries::prepended_var() const {
  MultiSeries out(nvars_ + 1, degree_cap_);
  std::vector<int> exps(static_cast<std::size_t>(nvars_) + 1);
  for (const auto& [e, c] : terms_) {
    exps[0] = 0;
    std::copy(e.begin(), e.end(), exps.begin() + 1);
    out.add_term(exps, c);
  }
  return out;
}

std::string MultiSeries::to_json() const {
  nlohmann::ordered_json out = nlohmann::ordered_json::array();
  for (const auto& [e, c] : terms_) {
    nlohmann::ordered_json rec;
    rec["exps"] = e;
    rec["coef"] = to_string(c);
    out.push_back(std::move(rec));
  }
  return out.dump();
}

void for_each_split(int total, int slots, const std::function<void(const std::vector<int>&)>& fn) {
  if (total < 0 || slots < 0) throw std::invalid_argument("for_each_split: negative arguments");
  if (slots == 0) {
    if (total == 0) fn({});
    return;
  }
  std::vector<int> parts(static_cast<std::size_t>(slots), 0);
  auto go = [&](auto&& self, int slot, int remaining) -> void {
    if (slot == slots - 1) {
      parts[static_cast<std::size_t>(slot)] = remaining;
      fn(parts);
      return;
    }
    for (int v = 0; v <= remaining; ++v) {
      parts[static_cast<std::size_t>(slot)] = v;
      self(self, slot + 1, remaining - v);
    }
  };
  go(go, 0, total);
}

MultiSeries expand_tail_sum(const UniSeries& f, int nvars, int first_var, int cap) {
  if (first_var < 0 || first_var >= nvars) throw std::invalid_argument("expand_tail_sum: variable out of range");
  MultiSeries out(nvars, cap);
  const int slots = nvars - first_var;
  std::vector<int> exps(static_cast<std::size_t>(nvars), 0);
  std::vector<unsigned> head(static_cast<std::size_t>(slots), 0);
  for (int rho = 0; rho <= std::min(cap, f.degree_cap()); ++rho) {
    const Rational& c = f.coefficient(rho);
    if (c == 0) continue;
    for_each_split(rho, slots, [&](const std::vector<int>& parts) {
      for (int i = 0; i < slots; ++i) {
        exps[static_cast<std::size_t>(first_var + i)] = parts[static_cast<std::size_t>(i)];
        head[static_cast<std::size_t>(i)] = static_cast<unsigned>(parts[static_cast<std::size_t>(i)]);
      }
      out.add_term(exps, c * Rational(multinomial(static_cast<unsigned>(rho), head)));
    });
  }
  return out;
}

}  // namespace mzv
