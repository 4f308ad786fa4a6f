#include "braidkit/artin_action.hpp"

#include <utility>

#include "braidkit/errors.hpp"

namespace braidkit {

namespace {

std::vector<int> reduce_letters(const std::vector<int>& in) {
  std::vector<int> stack;
  stack.reserve(in.size());
  for (int letter : in) {
    if (!stack.empty() && stack.back() == -letter)
      stack.pop_back();
    else
      stack.push_back(letter);
  }
  return stack;
}

void check_free_letter(int letter, int rank) {
  if (letter == 0) throw DomainError("free-group letter 0 is invalid");
  const int idx = letter < 0 ? -letter : letter;
  if (idx > rank)
    throw DomainError("free-group letter " + std::to_string(idx) +
                      " exceeds rank " + std::to_string(rank));
}

// Image of the single letter x_a^{sign of a} under sigma_i^{e}.
void emit_image(int i, int e, int a, std::vector<int>& out) {
  const int g = a < 0 ? -a : a;
  const bool inv = a < 0;
  auto push = [&](std::initializer_list<int> ls) {
    if (!inv) {
      for (int l : ls) out.push_back(l);
    } else {
      for (auto it = std::rbegin(ls); it != std::rend(ls); ++it) out.push_back(-*it);
    }
  };
  if (e > 0) {
    if (g == i)
      push({i + 1});
    else if (g == i + 1)
      push({-(i + 1), i, i + 1});
    else
      push({g});
  } else {
    if (g == i + 1)
      push({i});
    else if (g == i)
      push({i, i + 1, -i});
    else
      push({g});
  }
}

}  // namespace

FreeWord::FreeWord(int r, std::vector<int> ls) : rank(r) {
  if (r < 1) throw DomainError("free-group rank must be >= 1");
  for (int letter : ls) check_free_letter(letter, r);
  letters = reduce_letters(ls);
}

FreeWord parse_free_word(const std::string& text, int rank) {
  try {
    const BraidWord raw = parse_word(text, rank + 1);  // same grammar; range 1..rank
    return FreeWord(rank, raw.letters);
  } catch (const DomainError& e) {
    throw DomainError("invalid free word for rank " + std::to_string(rank) + ": " +
                      e.what());
  }
}

std::string serialize(const FreeWord& w) {
  std::string out;
  for (size_t k = 0; k < w.letters.size(); ++k) {
    if (k) out += ' ';
    out += std::to_string(w.letters[k]);
  }
  return out;
}

FreeWord invert(const FreeWord& w) {
  std::vector<int> letters(w.letters.rbegin(), w.letters.rend());
  for (int& letter : letters) letter = -letter;
  return FreeWord(w.rank, std::move(letters));
}

FreeWord concat(const FreeWord& a, const FreeWord& b) {
  if (a.rank != b.rank) throw DomainError("rank mismatch in free-word concat");
  std::vector<int> letters = a.letters;
  letters.insert(letters.end(), b.letters.begin(), b.letters.end());
  return FreeWord(a.rank, std::move(letters));
}

FreeWord cyclically_reduce(const FreeWord& w) {
  size_t lo = 0, hi = w.letters.size();
  while (hi - lo >= 2 && w.letters[lo] == -w.letters[hi - 1]) {
    ++lo;
    --hi;
  }
  return FreeWord(w.rank, std::vector<int>(w.letters.begin() + static_cast<long>(lo),
                                           w.letters.begin() + static_cast<long>(hi)));
}

FreeWord act_generator(int i, const FreeWord& w) {
  const int idx = i < 0 ? -i : i;
  if (idx < 1 || idx >= w.rank)
    throw DomainError("generator index out of range for the action");
  std::vector<int> out;
  out.reserve(w.letters.size() * 3);
  for (int a : w.letters) emit_image(idx, i > 0 ? 1 : -1, a, out);
  return FreeWord(w.rank, std::move(out));
}

FreeWord act(const BraidWord& beta, const FreeWord& w) {
  if (beta.strands != w.rank)
    throw DomainError("action needs rank equal to the strand count");
  FreeWord cur = w;
  for (int letter : beta.letters) cur = act_generator(letter, cur);
  return cur;
}

bool is_trivial_by_action(const BraidWord& beta) {
  const int n = beta.strands;
  for (int i = 1; i <= n; ++i) {
    const FreeWord xi(n, {i});
    if (act(beta, xi) != xi) return false;
  }
  return true;
}

bool is_braid_automorphism(const std::vector<FreeWord>& images) {
  if (images.empty()) throw DomainError("empty image list");
  const int n = static_cast<int>(images.size());
  for (const FreeWord& im : images) {
    if (im.rank != n) throw DomainError("image rank must equal the number of images");
    const FreeWord core = cyclically_reduce(im);
    if (core.letters.size() != 1 || core.letters.front() < 0) return false;
  }
  FreeWord prod(n, {});
  for (const FreeWord& im : images) prod = concat(prod, im);
  std::vector<int> boundary(static_cast<size_t>(n));
  for (int i = 1; i <= n; ++i) boundary[static_cast<size_t>(i) - 1] = i;
  return prod == FreeWord(n, std::move(boundary));
}

}  // namespace braidkit
