#include "mzv/renorm.hpp"

#include <stdexcept>

namespace mzv {

LaurentSeries phi(const Word& w, int precision) {
  if (precision < 1) throw std::invalid_argument("phi: precision must be >= 1");
  if (w.empty()) return LaurentSeries::one();
  // Each letter after the innermost multiplication costs one term, so build
  // x(z) with that much headroom.
  const int internal = precision + static_cast<int>(w.weight()) - 1;
  const LaurentSeries x = LaurentSeries::x(internal);
  LaurentSeries cur = LaurentSeries::one();
  for (std::size_t i = w.weight(); i-- > 0;) {
    if (w.letter(i) == 'y')
      cur = x * cur;
    else
      cur = cur.derivative();
    if (cur.is_zero() && cur.exact()) break;  // trailing d: everything vanishes
  }
  return cur;
}

CharacterState::CharacterState(int precision) : prec_(precision) {
  if (precision < 1) throw std::invalid_argument("character state: precision must be >= 1");
}

const LaurentSeries& CharacterState::phi(const Word& w) {
  auto it = phi_.find(w);
  if (it == phi_.end()) it = phi_.emplace(w, mzv::phi(w, prec_)).first;
  return it->second;
}

void CharacterState::ensure_birkhoff(const Word& w) {
  if (minus_.contains(w)) return;
  if (w.empty()) {
    minus_.emplace(w, LaurentSeries::one());
    plus_.emplace(w, LaurentSeries::one());
    return;
  }
  LaurentSeries bar = phi(w);
  const TensorSum split = reduce_factors(reduced_coproduct(w));
  for (const auto& [pair, c] : split.terms()) {
    ensure_birkhoff(pair.first);  // strictly smaller weight
    bar += c * (minus_.at(pair.first) * phi(pair.second));
  }
  LaurentSeries minus = -bar.pole_part();
  LaurentSeries plus = bar.regular_part();
  if (!plus.is_zero() && plus.valuation() < 0)
    throw std::logic_error("birkhoff: pole survived the subtraction");
  minus_.emplace(w, std::move(minus));
  plus_.emplace(w, std::move(plus));
}

const LaurentSeries& CharacterState::phi_minus(const Word& w) {
  ensure_birkhoff(w);
  return minus_.at(w);
}

const LaurentSeries& CharacterState::phi_plus(const Word& w) {
  ensure_birkhoff(w);
  return plus_.at(w);
}

const LaurentSeries& CharacterState::phi_plus_lemma(const Word& w) {
  auto it = plus_lemma_.find(w);
  if (it != plus_lemma_.end()) return it->second;
  if (w.depth() <= 1) return plus_lemma_.emplace(w, phi_plus(w)).first->second;
  LaurentSeries sum;
  const TensorSum split = reduce_factors(reduced_coproduct(w));
  for (const auto& [pair, c] : split.terms())
    sum += c * (phi_plus_lemma(pair.first) * phi_plus_lemma(pair.second));
  Rational scale = Rational(1) / Rational((Integer(1) << w.depth()) - 2);
  return plus_lemma_.emplace(w, scale * sum).first->second;
}

LaurentSeries CharacterState::phi_linear(const WordSum& ws) {
  LaurentSeries out = LaurentSeries::zero(prec_);
  for (const auto& [w, c] : ws.terms()) out += c * phi(w);
  return out;
}

LaurentSeries CharacterState::phi_plus_linear(const WordSum& ws) {
  LaurentSeries out = LaurentSeries::zero(prec_);
  for (const auto& [w, c] : ws.terms()) out += c * phi_plus(w);
  return out;
}

std::pair<LaurentSeries, LaurentSeries> birkhoff(const Word& w, CharacterState& state) {
  if (!w.admissible()) throw std::invalid_argument("birkhoff: word not admissible");
  return {state.phi_minus(w), state.phi_plus(w)};
}

int default_precision(const Composition& ks, int margin) { return ks.word_weight() + margin; }

namespace {

template <typename Fn>
Rational with_retry(const Composition& ks, Fn&& eval) {
  try {
    CharacterState state(default_precision(ks));
    return eval(state);
  } catch (const PrecisionError&) {
    CharacterState state(default_precision(ks, 8));
    return eval(state);
  }
}

}  // namespace

Rational zeta_ems_birkhoff(const Composition& ks, CharacterState& state) {
  return state.phi_plus(word_for_arguments(ks)).constant_term();
}

Rational zeta_ems_birkhoff(const Composition& ks) {
  return with_retry(ks, [&](CharacterState& st) { return zeta_ems_birkhoff(ks, st); });
}

Rational zeta_ems_lemma(const Composition& ks, CharacterState& state) {
  return state.phi_plus_lemma(word_for_arguments(ks)).constant_term();
}

Rational zeta_ems_lemma(const Composition& ks) {
  return with_retry(ks, [&](CharacterState& st) { return zeta_ems_lemma(ks, st); });
}

bool shuffle_relation_check(const Word& u, const Word& v, CharacterState& state) {
  if (!u.admissible() || !v.admissible())
    throw std::invalid_argument("shuffle relation: words must be admissible");
  LaurentSeries lhs = state.phi_plus_linear(reduce(shuffle(u, v)));
  LaurentSeries rhs = state.phi_plus(u) * state.phi_plus(v);
  return lhs.agrees_with(rhs);
}

}  // namespace mzv
