#include "mzv/verify.hpp"

#include "mzv/closedform.hpp"
#include "mzv/renorm.hpp"
#include "mzv/words.hpp"

namespace mzv {

namespace {

void report(CheckList& out, const std::string& name, bool ok, const std::string& detail = "") {
  out.push_back({name, ok, ok ? "" : detail});
}

std::string vs(const Rational& a, const Rational& b) { return to_string(a) + " vs " + to_string(b); }

WordSum prepend_d(const WordSum& ws) {
  WordSum out;
  for (const auto& [w, c] : ws.terms()) out.add(w.prepended('d'), c);
  return out;
}

// Grid of depth-n compositions with every entry <= max_entry.
std::vector<Composition> entry_grid(int depth, int max_entry) {
  std::vector<Composition> out;
  std::vector<int> parts(static_cast<std::size_t>(depth), 0);
  while (true) {
    out.push_back(Composition(parts));
    std::size_t a = 0;
    while (a < parts.size()) {
      if (parts[a] < max_entry) {
        ++parts[a];
        break;
      }
      parts[a] = 0;
      ++a;
    }
    if (a == parts.size()) break;
  }
  return out;
}

TensorSum swapped(const TensorSum& t) {
  TensorSum out;
  for (const auto& [pair, c] : t.terms()) out.add(pair.second, pair.first, c);
  return out;
}

}  // namespace

bool all_ok(const CheckList& checks) {
  for (const auto& c : checks)
    if (!c.ok) return false;
  return true;
}

CheckList verify_coproduct_oracle(int max_block_depth, int max_entry, int max_primitive) {
  CheckList out;
  for (int n = 2; n <= max_block_depth; ++n) {
    bool ok = true;
    std::string detail;
    for (const Composition& ks : entry_grid(n, max_entry)) {
      TensorSum explicit_form = reduced_coproduct_explicit(ks);
      TensorSum enumerated = reduce_factors(reduced_coproduct(word_from_blocks(ks)));
      if (explicit_form != enumerated) {
        ok = false;
        detail = "blocks (" + ks.display() + "): " + explicit_form.to_string() + " vs " +
                 enumerated.to_string();
        break;
      }
    }
    report(out, "reduced coproduct closed formula vs subset enumeration, depth " + std::to_string(n), ok,
           detail);
  }
  bool ok = true;
  std::string detail;
  for (int a = 0; a <= max_primitive; ++a) {
    if (!reduced_coproduct(depth_one_word(a)).zero()) {
      ok = false;
      detail = "d^" + std::to_string(a) + "y has a nonzero reduced coproduct";
      break;
    }
  }
  report(out, "one-block words are primitive", ok, detail);
  return out;
}

CheckList verify_coproduct_laws(int law_weight) {
  CheckList out;
  bool ok_d = true, ok_y = true, ok_cocomm = true, ok_counit = true;
  std::string detail_d, detail_y, detail_cocomm, detail_counit;
  for (const Word& w : admissible_words(law_weight - 1, false)) {
    TensorSum red = reduced_coproduct(w);
    if (ok_d && reduce_factors(reduced_coproduct(w.prepended('d'))) != tensor_action(Word("d"), red)) {
      ok_d = false;
      detail_d = "word " + w.display();
    }
    TensorSum rhs_y = tensor_action(Word("y"), red);
    rhs_y.add_sym(Word("y"), w, 1);
    rhs_y = reduce_factors(rhs_y);
    if (ok_y && reduce_factors(reduced_coproduct(w.prepended('y'))) != rhs_y) {
      ok_y = false;
      detail_y = "word " + w.display();
    }
  }
  for (const Word& w : admissible_words(law_weight, false)) {
    TensorSum full = coproduct(w);
    if (ok_cocomm && full != swapped(full)) {
      ok_cocomm = false;
      detail_cocomm = "word " + w.display();
    }
    if (ok_counit) {
      const auto& terms = full.terms();
      auto left = terms.find({Word::unit(), w});
      auto right = terms.find({w, Word::unit()});
      if (left == terms.end() || right == terms.end() || left->second != 1 || right->second != 1) {
        ok_counit = false;
        detail_counit = "word " + w.display();
      }
    }
  }
  report(out, "coproduct recursion under a leading d", ok_d, detail_d);
  report(out, "coproduct recursion under a leading y", ok_y, detail_y);
  report(out, "coproduct is cocommutative", ok_cocomm, detail_cocomm);
  report(out, "unit terms appear with coefficient one", ok_counit, detail_counit);
  return out;
}

CheckList verify_shuffle_homomorphism(int max_word_weight) {
  CheckList out;
  CharacterState state(2 * max_word_weight + 4);
  const std::vector<Word> words = admissible_words(max_word_weight);
  bool ok_plus = true, ok_phi = true;
  std::string detail_plus, detail_phi;
  for (const Word& u : words) {
    for (const Word& v : words) {
      if (ok_plus && !shuffle_relation_check(u, v, state)) {
        ok_plus = false;
        detail_plus = u.display() + " * " + v.display();
      }
      if (ok_phi) {
        LaurentSeries lhs = state.phi_linear(reduce(shuffle(u, v)));
        if (!lhs.agrees_with(state.phi(u) * state.phi(v))) {
          ok_phi = false;
          detail_phi = u.display() + " * " + v.display();
        }
      }
    }
  }
  report(out, "regularized character is multiplicative on the word product", ok_phi, detail_phi);
  report(out, "renormalized character is multiplicative on the word product", ok_plus, detail_plus);
  bool ok = true;
  std::string detail;
  for (int a = 0; a <= 3 && ok; ++a) {
    for (int b = 1; b <= 3 && ok; ++b) {
      Rational lhs = zeta_ems_birkhoff(Composition({a}), state) * zeta_ems_birkhoff(Composition({b}), state);
      Rational rhs = 0;
      for (int k = 0; k <= a; ++k) {
        Rational c = Rational(binomial(static_cast<unsigned>(a), static_cast<unsigned>(k)));
        Rational v = zeta_ems_birkhoff(Composition({b + k, a - k}), state);
        if (k % 2)
          rhs -= c * v;
        else
          rhs += c * v;
      }
      if (lhs != rhs) {
        ok = false;
        detail = "a=" + std::to_string(a) + " b=" + std::to_string(b) + ": " + vs(lhs, rhs);
      }
    }
  }
  report(out, "depth-2 product identity for renormalized values", ok, detail);
  return out;
}

CheckList verify_ideal_annihilation(int ideal_weight) {
  CheckList out;
  CharacterState state(2 * ideal_weight + 1 + 4);
  bool ok = true;
  std::string detail;
  for (const Word& u : admissible_words(ideal_weight)) {
    for (const Word& v : admissible_words(ideal_weight)) {
      WordSum generator =
          prepend_d(shuffle(u, v)) - shuffle(u.prepended('d'), v) - shuffle(u, v.prepended('d'));
      if (!state.phi_linear(generator).agrees_with(LaurentSeries())) {
        ok = false;
        detail = "u=" + u.display() + " v=" + v.display();
        break;
      }
    }
    if (!ok) break;
  }
  report(out, "character annihilates the relation-ideal generators", ok, detail);
  return out;
}

CheckList verify_pipeline_agreement(int max_depth, int max_weight) {
  CheckList out;
  CharacterState state(max_depth + max_weight + 4);
  for (int n = 1; n <= max_depth; ++n) {
    bool ok = true;
    std::string detail;
    for (const Composition& ks : compositions_with_sum_at_most(n, max_weight)) {
      Rational a = zeta_ems_birkhoff(ks, state);
      Rational b = zeta_ems_lemma(ks, state);
      Rational c = zeta_ems_closed(ks);
      if (!(a == b && b == c)) {
        ok = false;
        detail = "(" + ks.display() + "): birkhoff=" + to_string(a) + " lemma=" + to_string(b) +
                 " closed=" + to_string(c);
        break;
      }
    }
    report(out, "three pipelines agree at depth " + std::to_string(n), ok, detail);
  }
  return out;
}

CheckList verify_birkhoff_shapes(int shape_weight) {
  CheckList out;
  CharacterState state(shape_weight + 4);
  bool ok = true;
  std::string detail;
  for (const Word& w : admissible_words(shape_weight, false)) {
    const LaurentSeries& plus = state.phi_plus(w);
    const LaurentSeries& minus = state.phi_minus(w);
    bool plus_regular = plus.is_zero() || plus.valuation() >= 0;
    bool minus_polar =
        minus.exact() &&
        (minus.is_zero() || minus.valuation() + static_cast<int>(minus.coefficients().size()) - 1 < 0);
    if (!plus_regular || !minus_polar) {
      ok = false;
      detail = "word " + w.display();
      break;
    }
  }
  report(out, "Birkhoff factors split into regular and pure-pole parts", ok, detail);
  return out;
}

CheckList verify_known_values(int zeros_depth, int depth1_max, int even_max) {
  CheckList out;
  {
    bool ok = true;
    std::string detail;
    for (int n = 1; n <= zeros_depth && ok; ++n) {
      Composition zeros(std::vector<int>(static_cast<std::size_t>(n), 0));
      Rational expected(n % 2 ? -1 : 1, Integer(1) << n);
      Rational closed = zeta_ems_closed(zeros);
      Rational birk = zeta_ems_birkhoff(zeros);
      if (closed != expected || birk != expected) {
        ok = false;
        detail = "n=" + std::to_string(n) + ": closed " + vs(closed, expected);
      }
    }
    report(out, "all-zero arguments give (-1/2)^n", ok, detail);
  }
  {
    bool ok = true;
    std::string detail;
    for (int k = 0; k <= depth1_max && ok; ++k) {
      Rational expected = bernoulli(static_cast<unsigned>(k) + 1) / Rational(k + 1);
      if (k % 2) expected = -expected;
      Rational closed = zeta_ems_closed(Composition({k}));
      Rational birk = zeta_ems_birkhoff(Composition({k}));
      if (closed != expected || birk != expected) {
        ok = false;
        detail = "k=" + std::to_string(k) + ": closed " + vs(closed, expected);
      }
    }
    report(out, "depth-1 values match the Bernoulli formula", ok, detail);
  }
  {
    bool ok = true;
    std::string detail;
    for (int m = 1; m <= even_max && ok; ++m) {
      Rational v = zeta_ems_closed(Composition({2 * m}));
      if (v != 0) {
        ok = false;
        detail = "k=" + std::to_string(2 * m) + ": " + to_string(v);
      }
    }
    report(out, "depth-1 values vanish at positive even arguments", ok, detail);
  }
  return out;
}

CheckList verify_equivalence(int max_depth, int D) {
  CheckList out;
  for (int n = 1; n <= max_depth; ++n) {
    MultiSeries lhs = gen_ems(n, D);
    MultiSeries rhs = conversion_factor(n, D) * negate_vars(gen_fkmt(n, D));
    bool ok = lhs == rhs;
    report(out,
           "generating-function equivalence at depth " + std::to_string(n) + ", degree " + std::to_string(D),
           ok, ok ? "" : "difference " + (lhs - rhs).to_json());
  }
  return out;
}

CheckList verify_recurrence_identities(int max_depth, int max_weight) {
  CheckList out;
  for (int n = 2; n <= max_depth; ++n) {
    bool ok_f = true, ok_e = true;
    std::string detail_f, detail_e;
    for (const Composition& ks : compositions_with_sum_at_most(n, max_weight)) {
      if (ok_f && !fkmt_recurrence_check(ks)) {
        ok_f = false;
        detail_f = "(" + ks.display() + ")";
      }
      if (ok_e && !ems_recurrence_check(ks)) {
        ok_e = false;
        detail_e = "(" + ks.display() + ")";
      }
    }
    report(out, "desingularized recurrence at depth " + std::to_string(n), ok_f, detail_f);
    report(out, "renormalized recurrence at depth " + std::to_string(n), ok_e, detail_e);
  }
  return out;
}

CheckList verify_prefix_split(int max_depth, int max_weight) {
  CheckList out;
  for (int n = 2; n <= max_depth; ++n) {
    bool ok = true, ok_avg = true;
    std::string detail, detail_avg;
    for (const Composition& ks : compositions_with_sum_at_most(n, max_weight)) {
      if (ok && !prefix_split_check(ks)) {
        ok = false;
        detail = "(" + ks.display() + ")";
      }
      if (ok_avg && !averaged_recurrence_check(ks)) {
        ok_avg = false;
        detail_avg = "(" + ks.display() + ")";
      }
    }
    report(out, "renormalized prefix split at depth " + std::to_string(n), ok, detail);
    report(out, "averaged coproduct recurrence at depth " + std::to_string(n), ok_avg, detail_avg);
  }
  return out;
}

CheckList verify_genfn_factorization(int max_depth, int D) {
  CheckList out;
  for (int n = 2; n <= max_depth; ++n) {
    MultiSeries lhs_f = gen_fkmt(n, D);
    MultiSeries rhs_f =
        gen_fkmt(n - 1, D).prepended_var() * expand_tail_sum(fkmt_factor(D), n, 0, D);
    report(out, "desingularized generating function factorizes at depth " + std::to_string(n),
           lhs_f == rhs_f);
    MultiSeries lhs_e = gen_ems(n, D);
    MultiSeries rhs_e = gen_ems(n - 1, D).prepended_var() * expand_tail_sum(ems_factor(D), n, 0, D);
    report(out, "renormalized generating function factorizes at depth " + std::to_string(n), lhs_e == rhs_e);
  }
  return out;
}

CheckList verify_recurrence_pipeline(int max_depth, int max_weight) {
  CheckList out;
  bool ok = true;
  std::string detail;
  for (int n = 1; n <= max_depth && ok; ++n) {
    for (const Composition& ks : compositions_with_sum_at_most(n, max_weight)) {
      if (zeta_fkmt_recurrence(ks) != zeta_fkmt(ks) || zeta_ems_recurrence(ks) != zeta_ems_closed(ks)) {
        ok = false;
        detail = "(" + ks.display() + ")";
        break;
      }
    }
  }
  report(out, "recurrence pipeline matches the closed forms", ok, detail);
  return out;
}

CheckList verify_genfn_chain(int max_prefix_len, int max_entry, int D) {
  CheckList out;
  for (int len = 1; len <= max_prefix_len; ++len) {
    bool ok = true;
    std::string detail;
    for (const Composition& prefix : entry_grid(len, max_entry)) {
      if (!genfn_chain_check(prefix.parts, D)) {
        ok = false;
        detail = "prefix (" + prefix.display() + ")";
        break;
      }
    }
    report(out, "operator chain reproduces the generating function, prefix length " + std::to_string(len),
           ok, detail);
  }
  return out;
}

CheckList verify_conversions(int max_weight) {
  CheckList out;
  for (int n = 1; n <= 3; ++n) {
    bool ok_to_ems = true, ok_to_fkmt = true;
    std::string detail_to_ems, detail_to_fkmt;
    for (const Composition& ks : compositions_with_sum_at_most(n, max_weight)) {
      if (ok_to_ems) {
        Rational via = ems_from_fkmt(ks);
        Rational direct = zeta_ems_closed(ks);
        if (via != direct) {
          ok_to_ems = false;
          detail_to_ems = "(" + ks.display() + "): " + vs(via, direct);
        }
      }
      if (ok_to_fkmt) {
        Rational via = fkmt_from_ems(ks);
        Rational direct = zeta_fkmt(ks);
        if (via != direct) {
          ok_to_fkmt = false;
          detail_to_fkmt = "(" + ks.display() + "): " + vs(via, direct);
        }
      }
    }
    report(out, "renormalized from desingularized at depth " + std::to_string(n), ok_to_ems, detail_to_ems);
    report(out, "desingularized from renormalized at depth " + std::to_string(n), ok_to_fkmt,
           detail_to_fkmt);
  }
  return out;
}

}  // namespace mzv
