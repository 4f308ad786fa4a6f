#include "braidkit/combing.hpp"

#include <utility>

#include "braidkit/errors.hpp"

namespace braidkit {

namespace {

struct Token {
  bool is_free;  // x-letter or residual sigma-letter
  int letter;    // signed index
};

// Conjugate the free letter x_a^{sign} by sigma_k^{eps} (eps=+1 means
// sigma_k y sigma_k^{-1}), appending the image. Rules from the rewriting
// tables of the combing proof.
void conjugate_letter(int k, int eps, int a, std::vector<int>& out) {
  const int g = a < 0 ? -a : a;
  const bool inv = a < 0;
  auto push = [&](std::initializer_list<int> ls) {
    if (!inv) {
      for (int l : ls) out.push_back(l);
    } else {
      for (auto it = std::rbegin(ls); it != std::rend(ls); ++it) out.push_back(-*it);
    }
  };
  if (eps > 0) {
    if (g == k + 1)
      push({k});
    else if (g == k)
      push({-k, k + 1, k});
    else
      push({g});
  } else {
    if (g == k)
      push({k + 1});
    else if (g == k + 1)
      push({k + 1, k, -(k + 1)});
    else
      push({g});
  }
}

// One level of combing: decompose a braid fixing the last strand as
// iota(level word) * (braid on one fewer strand).
std::pair<FreeWord, BraidWord> comb_level(const BraidWord& w) {
  const int m = w.strands;
  int tracked = m;  // position of the puncture that started at m
  std::vector<Token> tokens;
  for (int letter : w.letters) {
    const int l = letter < 0 ? -letter : letter;
    const int e = letter < 0 ? -1 : 1;
    if (l == tracked) {
      if (e < 0) tokens.push_back({true, -tracked});
      tracked = l + 1;
    } else if (l == tracked - 1) {
      if (e > 0) tokens.push_back({true, tracked - 1});
      tracked = l;
    } else if (l <= tracked - 2) {
      tokens.push_back({false, letter});
    } else {  // l >= tracked + 1
      tokens.push_back({false, e > 0 ? l - 1 : -(l - 1)});
    }
  }
  if (tracked != m) throw DomainError("strand does not return to its base position");

  // Collect sigma letters on the right: each x-token moves left through
  // the residue accumulated so far, conjugating one sigma at a time.
  std::vector<int> residue;
  FreeWord free_part(m - 1 >= 1 ? m - 1 : 1, {});
  for (const Token& token : tokens) {
    if (!token.is_free) {
      residue.push_back(token.letter);
      continue;
    }
    std::vector<int> y{token.letter};
    for (size_t t = residue.size(); t-- > 0;) {
      const int k = residue[t] < 0 ? -residue[t] : residue[t];
      const int eps = residue[t] < 0 ? -1 : 1;
      std::vector<int> next;
      next.reserve(y.size() * 3);
      for (int a : y) conjugate_letter(k, eps, a, next);
      y = FreeWord(m - 1, std::move(next)).letters;  // eager reduction
    }
    free_part = concat(free_part, FreeWord(m - 1, std::move(y)));
  }
  return {std::move(free_part), BraidWord(m - 1, std::move(residue))};
}

}  // namespace

bool is_pure(const BraidWord& w) { return permutation(w).is_identity(); }

BraidWord pure_generator(int i, int ambient) {
  if (i < 1 || i > ambient - 1)
    throw DomainError("pure generator index out of range");
  std::vector<int> letters;
  for (int t = ambient - 1; t > i; --t) letters.push_back(-t);
  letters.push_back(i);
  letters.push_back(i);
  for (int t = i + 1; t <= ambient - 1; ++t) letters.push_back(t);
  return BraidWord(ambient, std::move(letters));
}

BraidWord remove_last_strand(const BraidWord& w) {
  const int n = w.strands;
  if (n < 2) throw DomainError("no strand to remove");
  if (permutation(w).apply(n) != n)
    throw DomainError("permutation moves the last strand");
  int tracked = n;
  std::vector<int> letters;
  for (int letter : w.letters) {
    const int l = letter < 0 ? -letter : letter;
    if (l == tracked) {
      tracked = l + 1;
    } else if (l == tracked - 1) {
      tracked = l;
    } else if (l <= tracked - 2) {
      letters.push_back(letter);
    } else {
      letters.push_back(letter < 0 ? -(l - 1) : l - 1);
    }
  }
  return BraidWord(n - 1, std::move(letters));
}

BraidWord include_strand(const BraidWord& w) {
  return BraidWord(w.strands + 1, w.letters);
}

CombingCoordinates comb(const BraidWord& w) {
  if (!is_pure(w)) throw DomainError("comb requires a pure braid");
  CombingCoordinates coords;
  BraidWord cur = w;
  for (int m = w.strands; m >= 2; --m) {
    auto [level, rest] = comb_level(cur);
    coords.levels.push_back(std::move(level));
    cur = std::move(rest);
  }
  return coords;
}

bool is_trivial_pure(const BraidWord& w) { return comb(w).all_trivial(); }

BraidWord evaluate_combing(const CombingCoordinates& coords, int strands) {
  BraidWord out(strands, {});
  int level_strands = strands;
  for (const FreeWord& level : coords.levels) {
    BraidWord piece(level_strands, {});
    for (int a : level.letters) {
      const BraidWord gen = pure_generator(a < 0 ? -a : a, level_strands);
      piece = concat(piece, a < 0 ? invert(gen) : gen);
    }
    out = concat(out, BraidWord(strands, piece.letters));
    --level_strands;
  }
  return out;
}

}  // namespace braidkit
