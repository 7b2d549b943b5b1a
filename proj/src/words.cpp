#include "mzv/words.hpp"

#include <sstream>
#include <stdexcept>

namespace mzv {

Word::Word(std::string_view letters) : letters_(letters) {
  for (char c : letters_)
    if (c != 'd' && c != 'y') throw std::invalid_argument("word: letters must be 'd' or 'y'");
}

std::size_t Word::depth() const {
  std::size_t n = 0;
  for (char c : letters_)
    if (c == 'y') ++n;
  return n;
}

Word Word::prepended(char letter) const {
  Word out;
  out.letters_.reserve(letters_.size() + 1);
  out.letters_.push_back(letter);
  out.letters_ += letters_;
  return out;
}

Word Word::subword(std::uint32_t mask) const {
  Word out;
  for (std::size_t i = 0; i < letters_.size(); ++i)
    if (mask & (std::uint32_t{1} << i)) out.letters_.push_back(letters_[i]);
  return out;
}

WordSum WordSum::of(const Word& w, const Rational& c) {
  WordSum out;
  out.add(w, c);
  return out;
}

void WordSum::add(const Word& w, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

WordSum& WordSum::operator+=(const WordSum& o) {
  for (const auto& [w, c] : o.terms_) add(w, c);
  return *this;
}

WordSum& WordSum::operator-=(const WordSum& o) {
  for (const auto& [w, c] : o.terms_) add(w, -c);
  return *this;
}

WordSum& WordSum::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, v] : terms_) v *= c;
  return *this;
}

std::string WordSum::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    if (!first) out << " + ";
    first = false;
    out << mzv::to_string(c) << "*" << w.display();
  }
  return out.str();
}

void TensorSum::add(const Word& left, const Word& right, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace({left, right}, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void TensorSum::add_sym(const Word& left, const Word& right, const Rational& c) {
  add(left, right, c);
  add(right, left, c);
}

TensorSum& TensorSum::operator+=(const TensorSum& o) {
  for (const auto& [t, c] : o.terms_) add(t.first, t.second, c);
  return *this;
}

TensorSum& TensorSum::operator-=(const TensorSum& o) {
  for (const auto& [t, c] : o.terms_) add(t.first, t.second, -c);
  return *this;
}

TensorSum& TensorSum::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [t, v] : terms_) v *= c;
  return *this;
}

std::string TensorSum::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [t, c] : terms_) {
    if (!first) out << " + ";
    first = false;
    out << mzv::to_string(c) << "*(" << t.first.display() << " (x) " << t.second.display() << ")";
  }
  return out.str();
}

WordSum reduce(const WordSum& ws) {
  WordSum out;
  for (const auto& [w, c] : ws.terms())
    if (!w.ends_in_d()) out.add(w, c);
  return out;
}

TensorSum reduce_factors(const TensorSum& ts) {
  TensorSum out;
  for (const auto& [t, c] : ts.terms())
    if (!t.first.ends_in_d() && !t.second.ends_in_d()) out.add(t.first, t.second, c);
  return out;
}

namespace {

WordSum prepend_all(char letter, const WordSum& ws) {
  WordSum out;
  for (const auto& [w, c] : ws.terms()) out.add(w.prepended(letter), c);
  return out;
}

}  // namespace

WordSum shuffle(const Word& u, const Word& v) {
  if (u.empty()) return WordSum::of(v);
  if (v.empty()) return WordSum::of(u);
  // Either leading y is pulled out front; both rules agree when both lead.
  if (u.letter(0) == 'y') return prepend_all('y', shuffle(u.tail(), v));
  if (v.letter(0) == 'y') return prepend_all('y', shuffle(u, v.tail()));
  // du * dv = d(u * dv) - u * ddv
  return prepend_all('d', shuffle(u.tail(), v)) - shuffle(u.tail(), v.prepended('d'));
}

TensorSum coproduct(const Word& w) {
  if (!w.admissible()) throw std::invalid_argument("coproduct: word not admissible");
  const std::size_t n = w.weight();
  if (n > 24) throw std::invalid_argument("coproduct: word weight too large for subset enumeration");
  TensorSum out;
  if (n == 0) {
    out.add(Word::unit(), Word::unit(), 1);
    return out;
  }
  const std::uint32_t full = (n == 32) ? ~std::uint32_t{0} : ((std::uint32_t{1} << n) - 1);
  for (std::uint32_t mask = 0;; ++mask) {
    Word left = w.subword(mask);
    Word right = w.subword(full & ~mask);
    if (left.admissible() && right.admissible()) out.add(left, right, 1);
    if (mask == full) break;
  }
  return out;
}

TensorSum reduced_coproduct(const Word& w) {
  if (w.empty()) throw std::invalid_argument("reduced_coproduct: unit word");
  TensorSum out = coproduct(w);
  out.add(Word::unit(), w, -1);
  out.add(w, Word::unit(), -1);
  return out;
}

TensorSum tensor_action(const Word& x, const TensorSum& t) {
  TensorSum cur = t;
  for (std::size_t i = x.weight(); i-- > 0;) {
    char letter = x.letter(i);
    TensorSum next;
    for (const auto& [pair, c] : cur.terms()) {
      next.add(pair.first.prepended(letter), pair.second, c);
      next.add(pair.first, pair.second.prepended(letter), c);
    }
    cur = std::move(next);
  }
  return reduce_factors(cur);
}

Word depth_one_word(int m) {
  if (m < 0) throw std::invalid_argument("depth_one_word: negative exponent");
  std::string s(static_cast<std::size_t>(m), 'd');
  s.push_back('y');
  return Word(s);
}

namespace {

// d^{k_a}y ... d^{k_b}y (1-based inclusive block range, given order).
Word block_word(const Composition& ks, int a, int b) {
  std::string s;
  for (int t = a; t <= b; ++t) {
    s.append(static_cast<std::size_t>(ks.parts[static_cast<std::size_t>(t - 1)]), 'd');
    s.push_back('y');
  }
  return Word(s);
}

Word d_run(int m) { return Word(std::string(static_cast<std::size_t>(m), 'd')); }

}  // namespace

TensorSum reduced_coproduct_explicit(const Composition& ks) {
  const int n = ks.size();
  if (n < 2) throw std::invalid_argument("reduced_coproduct_explicit: depth must be >= 2");
  TensorSum out;
  const int k1 = ks.parts[0];
  for (int i1 = 0; i1 <= k1; ++i1) {
    const int j1 = k1 - i1;
    Word left = depth_one_word(i1);
    Word right = d_run(j1) + block_word(ks, 2, n);
    out.add_sym(left, right, Rational(binomial(static_cast<unsigned>(k1), static_cast<unsigned>(i1))));
  }
  for (int p = 2; p <= n - 1; ++p) {
    // Enumerate the splits i_a + j_a = k_a for a = 1..p.
    std::vector<int> i(static_cast<std::size_t>(p), 0);
    while (true) {
      Rational coeff = 1;
      for (int a = 0; a < p; ++a)
        coeff *= Rational(binomial(static_cast<unsigned>(ks.parts[static_cast<std::size_t>(a)]),
                                   static_cast<unsigned>(i[static_cast<std::size_t>(a)])));
      // Branch over {u_q, v_q} = {d^{i_q}, d^{j_q}y} for q = 1..p-1.
      for (std::uint32_t branch = 0; branch < (std::uint32_t{1} << (p - 1)); ++branch) {
        Word left, right;
        for (int q = 0; q < p - 1; ++q) {
          const int iq = i[static_cast<std::size_t>(q)];
          const int jq = ks.parts[static_cast<std::size_t>(q)] - iq;
          Word u = d_run(iq);
          Word v = depth_one_word(jq);
          if (branch & (std::uint32_t{1} << q)) std::swap(u, v);
          left = left + u;
          right = right + v;
        }
        const int ip = i[static_cast<std::size_t>(p - 1)];
        const int jp = ks.parts[static_cast<std::size_t>(p - 1)] - ip;
        left = left + depth_one_word(ip);
        right = right + d_run(jp) + block_word(ks, p + 1, n);
        out.add_sym(left, right, coeff);
      }
      // Next split vector.
      int a = 0;
      while (a < p) {
        if (i[static_cast<std::size_t>(a)] < ks.parts[static_cast<std::size_t>(a)]) {
          ++i[static_cast<std::size_t>(a)];
          break;
        }
        i[static_cast<std::size_t>(a)] = 0;
        ++a;
      }
      if (a == p) break;
    }
  }
  return reduce_factors(out);
}

Word word_for_arguments(const Composition& ks) {
  std::string s;
  for (auto it = ks.parts.rbegin(); it != ks.parts.rend(); ++it) {
    s.append(static_cast<std::size_t>(*it), 'd');
    s.push_back('y');
  }
  return Word(s);
}

Word word_from_blocks(const Composition& ks) { return block_word(ks, 1, ks.size()); }

std::vector<Word> admissible_words(int max_weight, bool include_unit) {
  if (max_weight > 24) throw std::invalid_argument("admissible_words: weight too large to enumerate");
  std::vector<Word> out;
  if (include_unit) out.push_back(Word::unit());
  for (int w = 1; w <= max_weight; ++w) {
    // Any prefix of w-1 letters followed by y, in lexicographic order (d < y).
    for (std::uint32_t bits = 0; bits < (std::uint32_t{1} << (w - 1)); ++bits) {
      std::string s;
      for (int i = w - 2; i >= 0; --i) s.push_back(bits & (std::uint32_t{1} << i) ? 'y' : 'd');
      s.push_back('y');
      out.push_back(Word(s));
    }
  }
  return out;
}

}  // namespace mzv
