#pragma once

#include <compare>
#include <vector>

namespace braidkit {

// A bijection of {1..n}. Composition is function composition:
// (f.compose(g))(k) = f(g(k)).
class Permutation {
 public:
  Permutation() : img_{1} {}
  explicit Permutation(int n);  // identity on {1..n}
  static Permutation from_images(const std::vector<int>& images);  // 1-based
  static Permutation transposition(int n, int i);  // (i, i+1)
  static Permutation reversal(int n);              // k -> n+1-k

  int size() const { return static_cast<int>(img_.size()); }
  int apply(int k) const { return img_[static_cast<size_t>(k) - 1]; }
  const std::vector<int>& images() const { return img_; }

  Permutation inverse() const;
  Permutation compose(const Permutation& g) const;
  bool is_identity() const;
  int inversions() const;  // number of inverted pairs = Coxeter length

  // Left-multiply by (i,i+1): swaps the values i and i+1.
  void swap_values(int i);
  // Right-multiply by (i,i+1): swaps the entries at positions i and i+1.
  void swap_positions(int i);

  // Multiset of cycle lengths, sorted descending. Conjugation invariant.
  std::vector<int> cycle_type() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> img_;
};

}  // namespace braidkit
