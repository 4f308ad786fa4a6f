#pragma once

#include <compare>
#include <string>
#include <vector>

#include "braidkit/braid_word.hpp"

namespace braidkit {

// Reduced word in the free group F_rank; letter j > 0 is x_j, j < 0 its
// inverse. The constructor reduces, so values are always reduced.
struct FreeWord {
  int rank = 1;
  std::vector<int> letters;

  FreeWord() = default;
  FreeWord(int r, std::vector<int> ls);

  bool empty() const { return letters.empty(); }

  friend bool operator==(const FreeWord&, const FreeWord&) = default;
  friend auto operator<=>(const FreeWord&, const FreeWord&) = default;
};

FreeWord parse_free_word(const std::string& text, int rank);
std::string serialize(const FreeWord& w);

FreeWord invert(const FreeWord& w);
FreeWord concat(const FreeWord& a, const FreeWord& b);

// Strip matching inverse first/last letters.
FreeWord cyclically_reduce(const FreeWord& w);

// Applies the automorphism of sigma_i (negative i: its inverse):
//   x_i -> x_{i+1},  x_{i+1} -> x_{i+1}^{-1} x_i x_{i+1},  others fixed.
FreeWord act_generator(int i, const FreeWord& w);

// Action of a braid word, first letter acting first:
//   act(concat(a,b), w) = act(b, act(a, w)).
FreeWord act(const BraidWord& beta, const FreeWord& w);

// Word problem via the faithfulness of the action.
bool is_trivial_by_action(const BraidWord& beta);

// Artin's two conditions: every image is a conjugate of a generator and
// the product of the images is x_1...x_n. Together they characterize the
// automorphisms induced by braids.
bool is_braid_automorphism(const std::vector<FreeWord>& images);

}  // namespace braidkit
