#pragma once

#include <string>
#include <vector>

namespace mzv {

struct CheckResult {
  std::string name;
  bool ok = false;
  std::string detail;  // filled on failure: the offending input and both values
};

using CheckList = std::vector<CheckResult>;

bool all_ok(const CheckList& checks);

// Reduced coproduct: closed formula vs subset enumeration on block words
// with depth 2..max_block_depth and entries <= max_entry, plus vanishing on
// the one-block words d^a y for a <= max_primitive.
CheckList verify_coproduct_oracle(int max_block_depth = 4, int max_entry = 2, int max_primitive = 6);

// The two letter-recursion laws for the reduced coproduct, cocommutativity
// and the unit terms, on admissible words of weight <= law_weight.
CheckList verify_coproduct_laws(int law_weight = 6);

// phi and phi_plus turn the word product into the series product for all
// admissible pairs of weight <= max_word_weight; also the printed depth-2
// product identity for the renormalized values.
CheckList verify_shuffle_homomorphism(int max_word_weight = 4);

// phi annihilates the relation-ideal generators d(u*v) - du*v - u*dv built
// from admissible words of weight <= ideal_weight.
CheckList verify_ideal_annihilation(int ideal_weight = 3);

// The Birkhoff, coproduct-average and closed-form pipelines agree exactly on
// every composition with depth <= max_depth and sum <= max_weight.
CheckList verify_pipeline_agreement(int max_depth = 3, int max_weight = 6);

// phi_plus has no pole part and phi_minus is a pure pole polynomial, for
// admissible words of weight <= shape_weight.
CheckList verify_birkhoff_shapes(int shape_weight = 8);

// Known special values: (-1/2)^n at all-zero arguments up to zeros_depth,
// the depth-1 Bernoulli formula up to depth1_max, vanishing at positive even
// depth-1 arguments up to 2*even_max.
CheckList verify_known_values(int zeros_depth = 6, int depth1_max = 20, int even_max = 8);

// The generating-function equivalence: Z_ems(t) equals the conversion factor
// times Z_fkmt(-t), exactly as truncated series, for n = 1..max_depth at
// total degree D.
CheckList verify_equivalence(int max_depth = 3, int D = 8);

// One-step depth-lowering recurrences for both families on compositions with
// depth 2..max_depth and sum <= max_weight.
CheckList verify_recurrence_identities(int max_depth = 3, int max_weight = 6);

// The renormalized values also split desingularized-style into depth-(n-1)
// times depth-1 values.
CheckList verify_prefix_split(int max_depth = 3, int max_weight = 6);

// Z(t_1..t_n) = Z(t_2..t_n) Z(t_1+...+t_n) for both generating functions,
// as exact series at degree D.
CheckList verify_genfn_factorization(int max_depth = 3, int D = 8);

// The recurrence evaluation pipeline agrees with the closed forms.
CheckList verify_recurrence_pipeline(int max_depth = 3, int max_weight = 6);

// The multiply/differentiate operator chain on the depth-1 generating
// function, for prefixes of length <= max_prefix_len with entries
// <= max_entry, compared to degree D.
CheckList verify_genfn_chain(int max_prefix_len = 2, int max_entry = 2, int D = 4);

// Depth <= 3 linear conversions against the direct closed forms, for
// compositions with sum <= max_weight.
CheckList verify_conversions(int max_weight = 6);

}  // namespace mzv
