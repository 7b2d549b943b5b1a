#pragma once

#include "mzv/composition.hpp"
#include "mzv/exact_arith.hpp"

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>

namespace mzv {

// A word over the two-letter alphabet {d, y}; the empty word is the unit.
// Weight is the letter count, depth the number of y's. Admissible words are
// the empty word and the words ending in y.
class Word {
 public:
  Word() = default;
  explicit Word(std::string_view letters);
  static Word unit() { return Word(); }

  bool empty() const { return letters_.empty(); }
  std::size_t weight() const { return letters_.size(); }
  std::size_t depth() const;
  bool admissible() const { return letters_.empty() || letters_.back() == 'y'; }
  bool ends_in_d() const { return !letters_.empty() && letters_.back() == 'd'; }
  char letter(std::size_t i) const { return letters_[i]; }

  Word prepended(char letter) const;
  friend Word operator+(const Word& a, const Word& b) { return Word(a.letters_ + b.letters_, 0); }

  // Subword of the letters at the set bit positions (bit i = position i),
  // keeping their order.
  Word subword(std::uint32_t mask) const;
  Word tail() const { return Word(letters_.substr(1), 0); }

  const std::string& text() const { return letters_; }
  std::string display() const { return letters_.empty() ? "1" : letters_; }

  // Canonical order: weight first, then lexicographic with d < y.
  friend std::strong_ordering operator<=>(const Word& a, const Word& b) {
    if (auto c = a.letters_.size() <=> b.letters_.size(); c != 0) return c;
    return a.letters_ <=> b.letters_;
  }
  friend bool operator==(const Word& a, const Word& b) = default;

 private:
  Word(std::string letters, int) : letters_(std::move(letters)) {}
  std::string letters_;
};

// Finite rational linear combination of words; zero coefficients are never
// stored and equal sums have identical term maps.
class WordSum {
 public:
  WordSum() = default;
  static WordSum of(const Word& w, const Rational& c = 1);

  void add(const Word& w, const Rational& c);
  WordSum& operator+=(const WordSum& o);
  WordSum& operator-=(const WordSum& o);
  WordSum& operator*=(const Rational& c);
  friend WordSum operator+(WordSum a, const WordSum& b) { return a += b; }
  friend WordSum operator-(WordSum a, const WordSum& b) { return a -= b; }
  friend WordSum operator*(const Rational& c, WordSum a) { return a *= c; }

  bool zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const std::map<Word, Rational>& terms() const { return terms_; }

  bool operator==(const WordSum&) const = default;
  std::string to_string() const;

 private:
  std::map<Word, Rational> terms_;
};

// Finite rational linear combination of two-factor tensors of words.
class TensorSum {
 public:
  TensorSum() = default;

  void add(const Word& left, const Word& right, const Rational& c);
  // w (x) w' + w' (x) w
  void add_sym(const Word& left, const Word& right, const Rational& c);
  TensorSum& operator+=(const TensorSum& o);
  TensorSum& operator-=(const TensorSum& o);
  friend TensorSum operator+(TensorSum a, const TensorSum& b) { return a += b; }
  friend TensorSum operator-(TensorSum a, const TensorSum& b) { return a -= b; }
  TensorSum& operator*=(const Rational& c);

  bool zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const std::map<std::pair<Word, Word>, Rational>& terms() const { return terms_; }

  bool operator==(const TensorSum&) const = default;
  std::string to_string() const;

 private:
  std::map<std::pair<Word, Word>, Rational> terms_;
};

// Drops every word ending in d (those classes vanish in the quotient).
WordSum reduce(const WordSum& ws);
TensorSum reduce_factors(const TensorSum& ts);

// The recursive shuffle-type product on words over {d, y}:
//   1 * w = w * 1 = w
//   yu * v = u * yv = y(u * v)
//   du * dv = d(u * dv) - u * ddv
// The result is not reduced; callers working in the quotient apply reduce().
WordSum shuffle(const Word& u, const Word& v);

// Coproduct by admissible subsets: sum over S subset of positions with both
// extracted subwords admissible, of w_S (x) w_complement. Requires w
// admissible.
TensorSum coproduct(const Word& w);

// coproduct(w) minus the primitive terms 1 (x) w and w (x) 1. Requires w
// admissible and non-unit.
TensorSum reduced_coproduct(const Word& w);

// Letter-distribution action on tensors: each letter of x, applied right to
// left, maps w (x) w' to (letter w) (x) w' + w (x) (letter w'). Factors
// ending in d are dropped afterwards.
TensorSum tensor_action(const Word& x, const TensorSum& t);

// Closed formula for the reduced coproduct of d^{k_1}y ... d^{k_n}y (blocks
// in the given order), for n >= 2. Used as the cross-check partner of the
// subset enumeration.
TensorSum reduced_coproduct_explicit(const Composition& ks);

// The word whose renormalized character value gives the zeta value at
// (-k_1, ..., -k_n): blocks in reversed order, d^{k_n}y ... d^{k_1}y.
// This reversal lives only here.
Word word_for_arguments(const Composition& ks);

// d^{k_1}y ... d^{k_n}y, blocks in the order given.
Word word_from_blocks(const Composition& ks);

// d^m y
Word depth_one_word(int m);

// Every admissible word of weight <= max_weight (optionally with the unit),
// in canonical order.
std::vector<Word> admissible_words(int max_weight, bool include_unit = true);

}  // namespace mzv
