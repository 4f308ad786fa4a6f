#pragma once

#include <compare>
#include <string>
#include <vector>

#include "braidkit/permutation.hpp"

namespace braidkit {

// A word in the Artin generators of B_n. Letter i > 0 is sigma_i,
// letter i < 0 is sigma_{|i|}^{-1}; 1 <= |i| <= strands-1. The empty
// word is the identity braid. Values are immutable by convention: all
// operations return fresh words.
struct BraidWord {
  int strands = 1;
  std::vector<int> letters;

  BraidWord() = default;
  BraidWord(int n, std::vector<int> ls);

  bool empty() const { return letters.empty(); }
  int length() const { return static_cast<int>(letters.size()); }

  friend bool operator==(const BraidWord&, const BraidWord&) = default;
  friend auto operator<=>(const BraidWord&, const BraidWord&) = default;
};

// Word grammar: tokens separated by whitespace or commas; a token is an
// optional '-' followed by a decimal index, or a single letter alias
// (a..y = sigma_1..sigma_25, A..Y = their inverses).
BraidWord parse_word(const std::string& text, int strands);

// Canonical serialization: space-separated signed decimals.
std::string serialize(const BraidWord& w);

// Cancels adjacent sigma_i^{+-1} sigma_i^{-+1} pairs only.
BraidWord free_reduce(const BraidWord& w);

BraidWord invert(const BraidWord& w);
BraidWord concat(const BraidWord& a, const BraidWord& b);

// Sum of letter signs; a homomorphism to Z, invariant under conjugation.
int exponent_sum(const BraidWord& w);

// Underlying permutation: sigma_i -> (i, i+1), signs ignored.
// Homomorphism: permutation(concat(a,b)) = permutation(a).compose(permutation(b)).
Permutation permutation(const BraidWord& w);

// Conjugation by Delta^k: letter index i -> n-i when k is odd.
BraidWord apply_tau(const BraidWord& w, int k);

void require_same_strands(const BraidWord& a, const BraidWord& b);

}  // namespace braidkit
