#pragma once

#include "mzv/composition.hpp"
#include "mzv/laurent.hpp"
#include "mzv/words.hpp"

#include <map>
#include <utility>

namespace mzv {

// The character value of a word: reading the letters right to left starting
// from the constant 1, y multiplies by x(z) = e^z/(1-e^z) and d applies
// d/dz. On d^{k_1}y...d^{k_n}y this is the operator chain
// del^{k_1} (x del^{k_2}) ... (x del^{k_n}) applied to x(z); words ending in
// d evaluate to 0. The result carries at least `precision` correct terms.
LaurentSeries phi(const Word& w, int precision);

// Per-run evaluation context: a fixed working precision plus memo tables for
// the character and its Birkhoff factors. Single-owner; distinct states may
// run in parallel.
class CharacterState {
 public:
  explicit CharacterState(int precision);
  int precision() const { return prec_; }

  const LaurentSeries& phi(const Word& w);

  // Birkhoff factors by the Bogoliubov recursion over the reduced coproduct:
  //   phibar(w) = phi(w) + sum phi_minus(w') phi(w'')
  //   phi_minus(w) = -pole_part(phibar(w)),  phi_plus(w) = regular_part(phibar(w)).
  const LaurentSeries& phi_minus(const Word& w);
  const LaurentSeries& phi_plus(const Word& w);

  // phi_plus computed by the depth recursion instead: for depth > 1,
  //   phi_plus(w) = 1/(2^depth - 2) * sum phi_plus(w') phi_plus(w'')
  // over the reduced coproduct; depth <= 1 falls back to the Birkhoff route.
  // Independent of the Bogoliubov subtraction for depth > 1.
  const LaurentSeries& phi_plus_lemma(const Word& w);

  LaurentSeries phi_linear(const WordSum& ws);
  LaurentSeries phi_plus_linear(const WordSum& ws);

 private:
  void ensure_birkhoff(const Word& w);

  int prec_;
  std::map<Word, LaurentSeries> phi_;
  std::map<Word, LaurentSeries> minus_;
  std::map<Word, LaurentSeries> plus_;
  std::map<Word, LaurentSeries> plus_lemma_;
};

// (phi_minus(w), phi_plus(w))
std::pair<LaurentSeries, LaurentSeries> birkhoff(const Word& w, CharacterState& state);

// Working precision for a target composition: pole order bound plus margin.
int default_precision(const Composition& ks, int margin = 4);

// Renormalized values: constant term of phi_plus on word_for_arguments(ks).
// The one-argument forms pick the default precision and retry once with a
// doubled margin if the margin is exhausted.
Rational zeta_ems_birkhoff(const Composition& ks, CharacterState& state);
Rational zeta_ems_birkhoff(const Composition& ks);
Rational zeta_ems_lemma(const Composition& ks, CharacterState& state);
Rational zeta_ems_lemma(const Composition& ks);

// phi_plus(u * v) == phi_plus(u) phi_plus(v) up to the shared precision.
bool shuffle_relation_check(const Word& u, const Word& v, CharacterState& state);

}  // namespace mzv
