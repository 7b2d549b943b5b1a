#pragma once

#include "mzv/composition.hpp"
#include "mzv/exact_arith.hpp"
#include "mzv/multiseries.hpp"

#include <span>

namespace mzv {

// Bernoulli-sum values. Both are sums over upper-triangular arrays
// (nu_{ij})_{i<=j<=n} of non-negative integers whose j-th column sums to
// k_j; each term carries the product of the column multinomials
// k_j!/(nu_{1j}! ... nu_{jj}!) and, per row i with row sum r_i, the factor
// B_{r_i+1} (desingularized) or B_{r_i+1}/(r_i+1) (renormalized), with an
// overall sign (-1)^(k_1+...+k_n).
Rational zeta_fkmt(const Composition& ks);
Rational zeta_ems_closed(const Composition& ks);

// Evaluation through the depth-lowering recurrences alone (depth-1 closed
// forms as the base case); an independent route used for cross-checking.
Rational zeta_fkmt_recurrence(const Composition& ks);
Rational zeta_ems_recurrence(const Composition& ks);

// Generating functions Z(t_1,...,t_n) = sum (-t)^k/k! zeta(-k), expanded
// exactly to total degree D. Every factor is a unit power series in
// s_i = t_i+...+t_n obtained by exact division after cancelling the shared
// power of s_i.
MultiSeries gen_fkmt(int n, int D);
MultiSeries gen_ems(int n, int D);

// prod_i (1 - e^{-s_i})/s_i, the factor relating the two generating
// functions.
MultiSeries conversion_factor(int n, int D);

MultiSeries negate_vars(const MultiSeries& ms);

// Reads a zeta value back out of a generating function:
// (-1)^(sum k) * prod(k_i!) * [t^k] ms.
Rational coefficient_to_zeta(const MultiSeries& ms, const Composition& ks);

// Univariate building blocks (all exact to the cap).
UniSeries fkmt_factor(int cap);        // ((1-s)e^s - 1)/(e^s - 1)^2
UniSeries ems_factor(int cap);         // (s - (e^s - 1))/(s(e^s - 1))
UniSeries conversion_series(int cap);  // (1 - e^{-s})/s
UniSeries ems_depth1_series(int cap);  // sum (-x)^k/k! zeta_ems(-k), from gen_ems(1, cap)

// One-step recurrence identities, depth n >= 2, checked against the closed
// forms:
//   desingularized: zeta(-k_1..-k_n) = sum over splits of k_2..k_n of
//     prod C(k_a,i_a) zeta(-i_2..-i_n) zeta(-k_1-j_2-...-j_n)
//   renormalized: zeta(-k_1..-k_n) = sum over i_n+j_n=k_n of
//     C(k_n,i_n) zeta(-i_n) zeta(-k_1..-k_{n-1}-j_n)
bool fkmt_recurrence_check(const Composition& ks);
bool ems_recurrence_check(const Composition& ks);

// The renormalized values also satisfy the desingularized-style split into a
// depth-(n-1) value times a depth-1 value; depth n >= 2.
bool prefix_split_check(const Composition& ks);

// For depth n >= 3, 2 <= p <= n-1 and any choice of merge-vs-separate at the
// positions p..n-1 (bit t of merge_mask merges i_{p+t+1} into the first
// factor's last argument; the complementary choice applies to the second
// factor): the interleaved double sum over splits of k_p..k_n collapses to
// the same one-step split of k_n.
bool interleaved_split_check(const Composition& ks, int p, unsigned merge_mask);

// The averaged identity behind the coproduct recursion, depth n >= 2:
// (2^{n-1} - 1) zeta equals the one-step split plus the interleaved branch
// sums over all p and all merge choices.
bool averaged_recurrence_check(const Composition& ks);

// Checks that the alternating multiply-by-h / differentiate chain built from
// the depth-1 generating function h reproduces the depth-n generating
// function in its last argument, coefficient-wise up to degree D (>= 3):
//   sum_m (-x)^m/m! zeta_ems(-k_1..-k_{n-1},-m)
//     = (-1)^(k_1+...+k_{n-1}) (h d^{k_{n-1}}) ... (h d^{k_1}) (h).
bool genfn_chain_check(std::span<const int> prefix, int D);

// Depth <= 3 linear conversions between the two families of values.
Rational ems_from_fkmt(const Composition& ks);
Rational fkmt_from_ems(const Composition& ks);

}  // namespace mzv
