#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace mzv {

// Argument tuple (k_1, ..., k_n) of a zeta value at (-k_1, ..., -k_n).
struct Composition {
  std::vector<int> parts;

  explicit Composition(std::vector<int> p) : parts(std::move(p)) {
    if (parts.empty()) throw std::invalid_argument("composition: needs at least one part");
    for (int k : parts)
      if (k < 0) throw std::invalid_argument("composition: parts must be >= 0");
  }

  int size() const { return static_cast<int>(parts.size()); }
  int sum() const {
    int s = 0;
    for (int k : parts) s += k;
    return s;
  }
  // Weight of the word this composition maps to.
  int word_weight() const { return sum() + size(); }

  std::string display() const {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(parts[i]);
    }
    return out;
  }

  bool operator==(const Composition&) const = default;
};

// All compositions of the given depth with sum(parts) <= max_sum, in
// lexicographic order.
inline std::vector<Composition> compositions_with_sum_at_most(int depth, int max_sum) {
  if (depth < 1 || max_sum < 0) throw std::invalid_argument("composition enumeration: bad bounds");
  std::vector<Composition> out;
  std::vector<int> parts(static_cast<std::size_t>(depth), 0);
  auto go = [&](auto&& self, int slot, int budget) -> void {
    if (slot == depth) {
      out.push_back(Composition(parts));
      return;
    }
    for (int v = 0; v <= budget; ++v) {
      parts[static_cast<std::size_t>(slot)] = v;
      self(self, slot + 1, budget - v);
    }
  };
  go(go, 0, max_sum);
  return out;
}

}  // namespace mzv
