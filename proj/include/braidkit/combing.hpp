#pragma once

#include <vector>

#include "braidkit/artin_action.hpp"
#include "braidkit/braid_word.hpp"

namespace braidkit {

// Coordinates of a pure braid in the iterated split exact sequences
// 1 -> F_{k-1} -> PB_k -> PB_{k-1} -> 1. levels[0] is the top level
// (k = strands, rank k-1); the last entry is level 2 (rank 1).
struct CombingCoordinates {
  std::vector<FreeWord> levels;

  bool all_trivial() const {
    for (const FreeWord& level : levels)
      if (!level.empty()) return false;
    return true;
  }
};

bool is_pure(const BraidWord& w);

// iota(x_i) in B_ambient: (sigma_{ambient-1}^{-1}...sigma_{i+1}^{-1})
// sigma_i^2 (sigma_{i+1}...sigma_{ambient-1}).
BraidWord pure_generator(int i, int ambient);

// Defined whenever the permutation fixes the last strand; deletes the
// strand based at position n and renumbers the remaining crossings.
BraidWord remove_last_strand(const BraidWord& w);

// Section of remove_last_strand: same letters, one more strand.
BraidWord include_strand(const BraidWord& w);

// Zariski/Artin combing, implemented as the constructive presentation
// proof: bracket each letter with strand-position words, classify, then
// push the residual sigma letters to the right.
CombingCoordinates comb(const BraidWord& w);

bool is_trivial_pure(const BraidWord& w);

// Re-evaluates coordinates through iota at every level; the result is
// equal (as a braid) to the combed input.
BraidWord evaluate_combing(const CombingCoordinates& coords, int strands);

}  // namespace braidkit
