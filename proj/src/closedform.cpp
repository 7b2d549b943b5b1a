#include "mzv/closedform.hpp"

#include <functional>
#include <map>
#include <stdexcept>

namespace mzv {

namespace {

Rational fkmt_depth1(int k) {
  Rational b = bernoulli(static_cast<unsigned>(k) + 1);
  return k % 2 ? Rational(-b) : b;
}

Rational ems_depth1(int k) {
  Rational b = bernoulli(static_cast<unsigned>(k) + 1) / Rational(k + 1);
  return k % 2 ? Rational(-b) : b;
}

// Upper-triangular arrays a[r][j] (column j = 1..n, rows r = r_lo..j) with
// every column summing to k_j. The callback sees the full (n+1)x(n+1) array;
// unused cells stay zero.
using Triangle = std::vector<std::vector<int>>;

void for_each_triangle(const std::vector<int>& k, bool with_row0,
                       const std::function<void(const Triangle&)>& fn) {
  const int n = static_cast<int>(k.size());
  Triangle a(static_cast<std::size_t>(n) + 1, std::vector<int>(static_cast<std::size_t>(n) + 1, 0));
  const int r_lo = with_row0 ? 0 : 1;
  auto go = [&](auto&& self, int j) -> void {
    if (j > n) {
      fn(a);
      return;
    }
    for_each_split(k[static_cast<std::size_t>(j - 1)], j - r_lo + 1, [&](const std::vector<int>& parts) {
      for (std::size_t t = 0; t < parts.size(); ++t)
        a[static_cast<std::size_t>(r_lo) + t][static_cast<std::size_t>(j)] = parts[t];
      self(self, j + 1);
    });
  };
  go(go, 1);
}

Rational column_multinomial(const std::vector<int>& k, const Triangle& a, int j, int r_lo) {
  std::vector<unsigned> entries;
  for (int r = r_lo; r <= j; ++r)
    entries.push_back(static_cast<unsigned>(a[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)]));
  return Rational(multinomial(static_cast<unsigned>(k[static_cast<std::size_t>(j - 1)]), entries));
}

Rational triangular_value(const Composition& ks, bool per_row_divide) {
  const int n = ks.size();
  Rational total = 0;
  for_each_triangle(ks.parts, false, [&](const Triangle& a) {
    Rational term = 1;
    for (int j = 1; j <= n; ++j) term *= column_multinomial(ks.parts, a, j, 1);
    for (int i = 1; i <= n && term != 0; ++i) {
      int row_sum = 0;
      for (int j = i; j <= n; ++j) row_sum += a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      Rational b = bernoulli(static_cast<unsigned>(row_sum) + 1);
      if (per_row_divide) b /= Rational(row_sum + 1);
      term *= b;
    }
    total += term;
  });
  return ks.sum() % 2 ? Rational(-total) : total;
}

}  // namespace

Rational zeta_fkmt(const Composition& ks) { return triangular_value(ks, false); }

Rational zeta_ems_closed(const Composition& ks) { return triangular_value(ks, true); }

namespace {

Rational fkmt_rec(const std::vector<int>& ks, std::map<std::vector<int>, Rational>& memo) {
  if (ks.size() == 1) return fkmt_depth1(ks[0]);
  if (auto it = memo.find(ks); it != memo.end()) return it->second;
  std::vector<int> tail(ks.begin() + 1, ks.end());
  Rational total = 0;
  std::vector<int> i(tail.size(), 0);
  while (true) {
    Rational coeff = 1;
    int jsum = 0;
    for (std::size_t a = 0; a < tail.size(); ++a) {
      coeff *= Rational(binomial(static_cast<unsigned>(tail[a]), static_cast<unsigned>(i[a])));
      jsum += tail[a] - i[a];
    }
    total += coeff * fkmt_rec(i, memo) * fkmt_depth1(ks[0] + jsum);
    std::size_t a = 0;
    while (a < tail.size()) {
      if (i[a] < tail[a]) {
        ++i[a];
        break;
      }
      i[a] = 0;
      ++a;
    }
    if (a == tail.size()) break;
  }
  memo.emplace(ks, total);
  return total;
}

Rational ems_rec(const std::vector<int>& ks, std::map<std::vector<int>, Rational>& memo) {
  if (ks.size() == 1) return ems_depth1(ks[0]);
  if (auto it = memo.find(ks); it != memo.end()) return it->second;
  const int kn = ks.back();
  Rational total = 0;
  for (int in = 0; in <= kn; ++in) {
    std::vector<int> front(ks.begin(), ks.end() - 1);
    front.back() += kn - in;
    total += Rational(binomial(static_cast<unsigned>(kn), static_cast<unsigned>(in))) * ems_depth1(in) *
             ems_rec(front, memo);
  }
  memo.emplace(ks, total);
  return total;
}

}  // namespace

Rational zeta_fkmt_recurrence(const Composition& ks) {
  std::map<std::vector<int>, Rational> memo;
  return fkmt_rec(ks.parts, memo);
}

Rational zeta_ems_recurrence(const Composition& ks) {
  std::map<std::vector<int>, Rational> memo;
  return ems_rec(ks.parts, memo);
}

UniSeries fkmt_factor(int cap) {
  // ((1-s)e^s - 1)/(e^s - 1)^2 with the shared s^2 cancelled: the numerator
  // becomes -sum_j (j+1)/(j+2)! s^j, the denominator (sum_j s^j/(j+1)!)^2.
  UniSeries num(cap), unit(cap);
  for (int j = 0; j <= cap; ++j) {
    num.set_coefficient(j, Rational(-(j + 1)) / Rational(factorial(static_cast<unsigned>(j) + 2)));
    unit.set_coefficient(j, Rational(1) / Rational(factorial(static_cast<unsigned>(j) + 1)));
  }
  return num.divided_by(unit * unit);
}

UniSeries ems_factor(int cap) {
  // (s - (e^s - 1))/(s(e^s - 1)) with the shared s^2 cancelled.
  UniSeries num(cap), unit(cap);
  for (int j = 0; j <= cap; ++j) {
    num.set_coefficient(j, Rational(-1) / Rational(factorial(static_cast<unsigned>(j) + 2)));
    unit.set_coefficient(j, Rational(1) / Rational(factorial(static_cast<unsigned>(j) + 1)));
  }
  return num.divided_by(unit);
}

UniSeries conversion_series(int cap) {
  // (1 - e^{-s})/s with the shared s cancelled.
  UniSeries out(cap);
  for (int j = 0; j <= cap; ++j) {
    Rational c = Rational(1) / Rational(factorial(static_cast<unsigned>(j) + 1));
    out.set_coefficient(j, j % 2 ? Rational(-c) : c);
  }
  return out;
}

UniSeries ems_depth1_series(int cap) {
  MultiSeries z = gen_ems(1, cap);
  UniSeries out(cap);
  for (int m = 0; m <= cap; ++m) out.set_coefficient(m, z.coefficient({m}));
  return out;
}

namespace {

MultiSeries factor_product(const UniSeries& f, int n, int D) {
  if (n < 1) throw std::invalid_argument("generating function: depth must be >= 1");
  MultiSeries out = expand_tail_sum(f, n, 0, D);
  for (int i = 1; i < n; ++i) out = out * expand_tail_sum(f, n, i, D);
  return out;
}

}  // namespace

MultiSeries gen_fkmt(int n, int D) { return factor_product(fkmt_factor(D), n, D); }

MultiSeries gen_ems(int n, int D) { return factor_product(ems_factor(D), n, D); }

MultiSeries conversion_factor(int n, int D) { return factor_product(conversion_series(D), n, D); }

MultiSeries negate_vars(const MultiSeries& ms) { return ms.negated_vars(); }

Rational coefficient_to_zeta(const MultiSeries& ms, const Composition& ks) {
  if (ms.nvars() != ks.size())
    throw std::invalid_argument("coefficient_to_zeta: depth does not match the variable count");
  if (ks.sum() > ms.degree_cap())
    throw std::invalid_argument("coefficient_to_zeta: total degree beyond the cap");
  Rational c = ms.coefficient(ks.parts);
  for (int k : ks.parts) c *= Rational(factorial(static_cast<unsigned>(k)));
  return ks.sum() % 2 ? Rational(-c) : c;
}

bool fkmt_recurrence_check(const Composition& ks) {
  if (ks.size() < 2) throw std::invalid_argument("recurrence check: depth must be >= 2");
  std::vector<int> tail(ks.parts.begin() + 1, ks.parts.end());
  Rational rhs = 0;
  std::vector<int> i(tail.size(), 0);
  while (true) {
    Rational coeff = 1;
    int jsum = 0;
    for (std::size_t a = 0; a < tail.size(); ++a) {
      coeff *= Rational(binomial(static_cast<unsigned>(tail[a]), static_cast<unsigned>(i[a])));
      jsum += tail[a] - i[a];
    }
    rhs += coeff * zeta_fkmt(Composition(i)) * zeta_fkmt(Composition({ks.parts[0] + jsum}));
    std::size_t a = 0;
    while (a < tail.size()) {
      if (i[a] < tail[a]) {
        ++i[a];
        break;
      }
      i[a] = 0;
      ++a;
    }
    if (a == tail.size()) break;
  }
  return zeta_fkmt(ks) == rhs;
}

namespace {

// sum over i_n + j_n = k_n of C(k_n, i_n) zeta(-i_n) zeta(-k_1..-k_{n-1}-j_n)
Rational ems_one_step_split(const Composition& ks) {
  const int kn = ks.parts.back();
  Rational sum = 0;
  for (int in = 0; in <= kn; ++in) {
    std::vector<int> front(ks.parts.begin(), ks.parts.end() - 1);
    front.back() += kn - in;
    sum += Rational(binomial(static_cast<unsigned>(kn), static_cast<unsigned>(in))) *
           zeta_ems_closed(Composition({in})) * zeta_ems_closed(Composition(front));
  }
  return sum;
}

// The interleaved double sum over splits i_a + j_a = k_a for a = p..n, with
// the first factor built from the i's and the second from k_1..k_{p-1} and
// the j's, merged or separated according to merge_mask.
Rational interleaved_branch_sum(const Composition& ks, int p, unsigned merge_mask) {
  const int n = ks.size();
  const int m = n - p + 1;  // split pairs at positions p..n
  std::vector<int> i(static_cast<std::size_t>(m), 0);
  Rational total = 0;
  while (true) {
    Rational coeff = 1;
    for (int t = 0; t < m; ++t)
      coeff *= Rational(binomial(static_cast<unsigned>(ks.parts[static_cast<std::size_t>(p - 1 + t)]),
                                 static_cast<unsigned>(i[static_cast<std::size_t>(t)])));
    std::vector<int> first{i[0]};
    std::vector<int> second(ks.parts.begin(), ks.parts.begin() + (p - 1));
    second.back() += ks.parts[static_cast<std::size_t>(p - 1)] - i[0];
    for (int t = 0; t < m - 1; ++t) {
      const int inext = i[static_cast<std::size_t>(t + 1)];
      const int jnext = ks.parts[static_cast<std::size_t>(p + t)] - inext;
      if (merge_mask & (1u << t)) {
        first.back() += inext;
        second.push_back(jnext);
      } else {
        first.push_back(inext);
        second.back() += jnext;
      }
    }
    total += coeff * zeta_ems_closed(Composition(first)) * zeta_ems_closed(Composition(second));
    int t = 0;
    while (t < m) {
      if (i[static_cast<std::size_t>(t)] < ks.parts[static_cast<std::size_t>(p - 1 + t)]) {
        ++i[static_cast<std::size_t>(t)];
        break;
      }
      i[static_cast<std::size_t>(t)] = 0;
      ++t;
    }
    if (t == m) break;
  }
  return total;
}

}  // namespace

bool ems_recurrence_check(const Composition& ks) {
  if (ks.size() < 2) throw std::invalid_argument("recurrence check: depth must be >= 2");
  return zeta_ems_closed(ks) == ems_one_step_split(ks);
}

bool interleaved_split_check(const Composition& ks, int p, unsigned merge_mask) {
  const int n = ks.size();
  if (n < 3 || p < 2 || p > n - 1) throw std::invalid_argument("interleaved split: need 2 <= p <= n-1");
  if (merge_mask >> (n - p)) throw std::invalid_argument("interleaved split: mask out of range");
  return interleaved_branch_sum(ks, p, merge_mask) == ems_one_step_split(ks);
}

bool averaged_recurrence_check(const Composition& ks) {
  const int n = ks.size();
  if (n < 2) throw std::invalid_argument("averaged recurrence: depth must be >= 2");
  Rational rhs = ems_one_step_split(ks);
  for (int p = 2; p <= n - 1; ++p)
    for (unsigned mask = 0; mask < (1u << (n - p)); ++mask) rhs += interleaved_branch_sum(ks, p, mask);
  Rational scale((Integer(1) << (n - 1)) - 1);
  return scale * zeta_ems_closed(ks) == rhs;
}

bool prefix_split_check(const Composition& ks) {
  if (ks.size() < 2) throw std::invalid_argument("prefix split check: depth must be >= 2");
  std::vector<int> tail(ks.parts.begin() + 1, ks.parts.end());
  Rational rhs = 0;
  std::vector<int> i(tail.size(), 0);
  while (true) {
    Rational coeff = 1;
    int jsum = 0;
    for (std::size_t a = 0; a < tail.size(); ++a) {
      coeff *= Rational(binomial(static_cast<unsigned>(tail[a]), static_cast<unsigned>(i[a])));
      jsum += tail[a] - i[a];
    }
    rhs += coeff * zeta_ems_closed(Composition(i)) * zeta_ems_closed(Composition({ks.parts[0] + jsum}));
    std::size_t a = 0;
    while (a < tail.size()) {
      if (i[a] < tail[a]) {
        ++i[a];
        break;
      }
      i[a] = 0;
      ++a;
    }
    if (a == tail.size()) break;
  }
  return zeta_ems_closed(ks) == rhs;
}

bool genfn_chain_check(std::span<const int> prefix, int D) {
  if (prefix.empty()) throw std::invalid_argument("genfn chain: prefix must be non-empty");
  if (D < 3) throw std::invalid_argument("genfn chain: need degree >= 3 to compare meaningfully");
  int sumk = 0;
  for (int k : prefix) {
    if (k < 0) throw std::invalid_argument("genfn chain: negative entry");
    sumk += k;
  }
  const int cap = D + sumk + static_cast<int>(prefix.size()) + 1;
  const UniSeries h = ems_depth1_series(cap);
  UniSeries chain = h;
  for (int k : prefix) chain = h * chain.derivative(k);
  std::vector<int> full(prefix.begin(), prefix.end());
  full.push_back(0);
  for (int m = 0; m <= D; ++m) {
    full.back() = m;
    Rational direct = zeta_ems_closed(Composition(full)) / Rational(factorial(static_cast<unsigned>(m)));
    if (m % 2) direct = -direct;
    Rational via_chain = chain.coefficient(m);
    if (sumk % 2) via_chain = -via_chain;
    if (direct != via_chain) return false;
  }
  return true;
}

namespace {

// Shared enumeration for the printed depth <= 3 conversions. Terms run over
// triangles with an extra top row; the factor attached to the i-th diagonal
// (cells a[r][r+i]) is 1/(sum+1) in one direction and B_sum in the other,
// and the inner zeta argument is the main diagonal.
Rational conversion_sum(const Composition& ks, bool to_ems) {
  const int n = ks.size();
  if (n > 3) throw std::invalid_argument("conversion formulas are available only to depth 3");
  Rational total = 0;
  for_each_triangle(ks.parts, true, [&](const Triangle& a) {
    Rational term = 1;
    for (int j = 1; j <= n; ++j) term *= column_multinomial(ks.parts, a, j, 0);
    std::vector<int> main_diag(static_cast<std::size_t>(n));
    int main_sum = 0;
    for (int r = 1; r <= n; ++r) {
      main_diag[static_cast<std::size_t>(r - 1)] = a[static_cast<std::size_t>(r)][static_cast<std::size_t>(r)];
      main_sum += main_diag[static_cast<std::size_t>(r - 1)];
    }
    for (int i = 1; i <= n; ++i) {
      int diag = 0;
      for (int r = 0; r + i <= n; ++r) diag += a[static_cast<std::size_t>(r)][static_cast<std::size_t>(r + i)];
      if (to_ems)
        term /= Rational(diag + 1);
      else
        term *= bernoulli(static_cast<unsigned>(diag));
    }
    if (term == 0) return;
    if (to_ems) {
      term *= zeta_fkmt(Composition(main_diag));
      if (main_sum % 2) term = -term;
    } else {
      term *= zeta_ems_closed(Composition(main_diag));
    }
    total += term;
  });
  if (!to_ems && ks.sum() % 2) total = -total;
  return total;
}

}  // namespace

Rational ems_from_fkmt(const Composition& ks) { return conversion_sum(ks, true); }

Rational fkmt_from_ems(const Composition& ks) { return conversion_sum(ks, false); }

}  // namespace mzv
