#pragma once

#include <algorithm>
#include <cstdlib>
#include <random>
#include <vector>

#include "braidkit/braid_word.hpp"
#include "braidkit/permutation.hpp"
#include "braidkit/simple_element.hpp"

namespace testutil {

inline braidkit::BraidWord random_word(std::mt19937& rng, int n, int len) {
  std::uniform_int_distribution<int> idx(1, n - 1);
  std::uniform_int_distribution<int> coin(0, 1);
  std::vector<int> letters;
  for (int k = 0; k < len; ++k) {
    const int i = idx(rng);
    letters.push_back(coin(rng) ? i : -i);
  }
  return braidkit::BraidWord(n, letters);
}

inline braidkit::BraidWord random_pure_word(std::mt19937& rng, int n, int even_len) {
  for (;;) {
    const braidkit::BraidWord w = random_word(rng, n, even_len - even_len % 2);
    if (braidkit::permutation(w).is_identity()) return w;
  }
}

inline braidkit::SimpleElement random_simple(std::mt19937& rng, int n) {
  std::vector<int> images(static_cast<size_t>(n));
  for (int k = 0; k < n; ++k) images[static_cast<size_t>(k)] = k + 1;
  std::shuffle(images.begin(), images.end(), rng);
  return braidkit::SimpleElement(n, braidkit::Permutation::from_images(images));
}

// Applies `moves` random legal rewrites: commutations, braid-relation
// replacements on same-sign triples, free-pair deletions and insertions.
// The result represents the same braid.
inline braidkit::BraidWord shuffle_by_relations(const braidkit::BraidWord& w,
                                                int moves, std::mt19937& rng) {
  std::vector<int> ls = w.letters;
  const int n = w.strands;
  std::uniform_int_distribution<int> idx(1, n > 1 ? n - 1 : 1);
  std::uniform_int_distribution<int> coin(0, 1);
  for (int m = 0; m < moves; ++m) {
    struct Move {
      int kind;
      size_t pos;
      int letter;
    };
    std::vector<Move> cands;
    for (size_t t = 0; t + 1 < ls.size(); ++t) {
      const int a = std::abs(ls[t]), b = std::abs(ls[t + 1]);
      if (std::abs(a - b) >= 2) cands.push_back({0, t, 0});
      if (ls[t] == -ls[t + 1]) cands.push_back({2, t, 0});
    }
    for (size_t t = 0; t + 2 < ls.size(); ++t) {
      if (ls[t] == ls[t + 2] && std::abs(std::abs(ls[t]) - std::abs(ls[t + 1])) == 1 &&
          (ls[t] > 0) == (ls[t + 1] > 0))
        cands.push_back({1, t, 0});
    }
    if (n > 1) {
      std::uniform_int_distribution<size_t> pos(0, ls.size());
      const int letter = coin(rng) ? idx(rng) : -idx(rng);
      cands.push_back({3, pos(rng), letter});
    }
    if (cands.empty()) break;
    std::uniform_int_distribution<size_t> pick(0, cands.size() - 1);
    const Move mv = cands[pick(rng)];
    switch (mv.kind) {
      case 0:
        std::swap(ls[mv.pos], ls[mv.pos + 1]);
        break;
      case 1: {
        const int sign = ls[mv.pos] > 0 ? 1 : -1;
        const int i = std::abs(ls[mv.pos]), j = std::abs(ls[mv.pos + 1]);
        ls[mv.pos] = sign * j;
        ls[mv.pos + 1] = sign * i;
        ls[mv.pos + 2] = sign * j;
        break;
      }
      case 2:
        ls.erase(ls.begin() + static_cast<long>(mv.pos),
                 ls.begin() + static_cast<long>(mv.pos) + 2);
        break;
      case 3:
        ls.insert(ls.begin() + static_cast<long>(mv.pos), {mv.letter, -mv.letter});
        break;
    }
  }
  return braidkit::BraidWord(n, ls);
}

}  // namespace testutil
