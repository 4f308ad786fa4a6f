#include "braidkit/simple_element.hpp"

#include <algorithm>
#include <utility>

#include "braidkit/errors.hpp"

namespace braidkit {

SimpleElement::SimpleElement(int n, Permutation p) : strands(n), perm(std::move(p)) {
  if (perm.size() != n) throw DomainError("permutation size does not match strand count");
}

bool SimpleElement::is_delta() const {
  return perm == Permutation::reversal(strands);
}

SimpleElement delta(int n) { return SimpleElement(n, Permutation::reversal(n)); }

SimpleElement atom(int n, int i) {
  return SimpleElement(n, Permutation::transposition(n, i));
}

BraidWord to_word(const SimpleElement& s) {
  const int n = s.strands;
  std::vector<int> cur(static_cast<size_t>(n));
  for (int k = 0; k < n; ++k) cur[static_cast<size_t>(k)] = k + 1;
  std::vector<int> letters;
  letters.reserve(static_cast<size_t>(s.length()));
  // Fill target positions right to left; the wanted value drifts right
  // one adjacent swap at a time, never disturbing the placed suffix.
  for (int p = n; p >= 1; --p) {
    const int value = s.perm.apply(p);
    int q = 1;
    while (cur[static_cast<size_t>(q) - 1] != value) ++q;
    for (; q < p; ++q) {
      std::swap(cur[static_cast<size_t>(q) - 1], cur[static_cast<size_t>(q)]);
      letters.push_back(q);
    }
  }
  return BraidWord(n, std::move(letters));
}

SimpleElement from_word(const BraidWord& w) {
  const int n = w.strands;
  // pos_to_strand tracks which strand currently sits at each position;
  // a pair of strands may cross at most once in a permutation braid.
  std::vector<int> pos_to_strand(static_cast<size_t>(n));
  for (int k = 0; k < n; ++k) pos_to_strand[static_cast<size_t>(k)] = k + 1;
  std::vector<bool> crossed(static_cast<size_t>(n) * static_cast<size_t>(n), false);
  for (int letter : w.letters) {
    if (letter < 0) throw DomainError("from_word requires a positive word");
    const int i = letter;
    int a = pos_to_strand[static_cast<size_t>(i) - 1];
    int b = pos_to_strand[static_cast<size_t>(i)];
    if (a > b) std::swap(a, b);
    const size_t key = static_cast<size_t>(a - 1) * static_cast<size_t>(n) + static_cast<size_t>(b - 1);
    if (crossed[key])
      throw DomainError("not a permutation braid: strands " + std::to_string(a) +
                        "," + std::to_string(b) + " cross twice");
    crossed[key] = true;
    std::swap(pos_to_strand[static_cast<size_t>(i) - 1], pos_to_strand[static_cast<size_t>(i)]);
  }
  return SimpleElement(n, permutation(w));
}

bool left_divides_atom(int i, const SimpleElement& s) {
  if (i < 1 || i >= s.strands) throw DomainError("atom index out of range");
  const Permutation inv = s.perm.inverse();
  return inv.apply(i) > inv.apply(i + 1);
}

bool right_divides_atom(const SimpleElement& s, int i) {
  if (i < 1 || i >= s.strands) throw DomainError("atom index out of range");
  return s.perm.apply(i) > s.perm.apply(i + 1);
}

SimpleElement meet(const SimpleElement& s, const SimpleElement& t) {
  if (s.strands != t.strands) throw DomainError("strand-count mismatch in meet");
  const int n = s.strands;
  // Work on images plus inverse tables so a peel is O(1).
  std::vector<int> a = s.perm.images(), b = t.perm.images();
  std::vector<int> ai(static_cast<size_t>(n)), bi(static_cast<size_t>(n));
  for (int k = 1; k <= n; ++k) {
    ai[static_cast<size_t>(a[static_cast<size_t>(k) - 1]) - 1] = k;
    bi[static_cast<size_t>(b[static_cast<size_t>(k) - 1]) - 1] = k;
  }
  Permutation d(n);
  for (;;) {
    int found = 0;
    for (int i = 1; i < n; ++i) {
      if (ai[static_cast<size_t>(i) - 1] > ai[static_cast<size_t>(i)] &&
          bi[static_cast<size_t>(i) - 1] > bi[static_cast<size_t>(i)]) {
        found = i;
        break;
      }
    }
    if (!found) break;
    const int i = found;
    // Peel sigma_i from the left of both: swap the values i, i+1.
    std::swap(a[static_cast<size_t>(ai[static_cast<size_t>(i) - 1]) - 1],
              a[static_cast<size_t>(ai[static_cast<size_t>(i)]) - 1]);
    std::swap(ai[static_cast<size_t>(i) - 1], ai[static_cast<size_t>(i)]);
    std::swap(b[static_cast<size_t>(bi[static_cast<size_t>(i) - 1]) - 1],
              b[static_cast<size_t>(bi[static_cast<size_t>(i)]) - 1]);
    std::swap(bi[static_cast<size_t>(i) - 1], bi[static_cast<size_t>(i)]);
    d.swap_positions(i);  // d <- d * sigma_i
  }
  return SimpleElement(n, d);
}

SimpleElement right_complement(const SimpleElement& s) {
  return SimpleElement(s.strands,
                       s.perm.inverse().compose(Permutation::reversal(s.strands)));
}

SimpleElement meet_right(const SimpleElement& s, const SimpleElement& t) {
  return reverse(meet(reverse(s), reverse(t)));
}

SimpleElement join(const SimpleElement& s, const SimpleElement& t) {
  if (s.strands != t.strands) throw DomainError("strand-count mismatch in join");
  const SimpleElement m = meet_right(right_complement(s), right_complement(t));
  // join = Delta * m^{-1}
  return SimpleElement(s.strands,
                       Permutation::reversal(s.strands).compose(m.perm.inverse()));
}

SimpleElement flip(const SimpleElement& s) {
  const Permutation omega = Permutation::reversal(s.strands);
  return SimpleElement(s.strands, omega.compose(s.perm).compose(omega));
}

SimpleElement reverse(const SimpleElement& s) {
  return SimpleElement(s.strands, s.perm.inverse());
}

SimpleElement simple_product(const SimpleElement& s, const SimpleElement& t) {
  return SimpleElement(s.strands, s.perm.compose(t.perm));
}

SimpleElement left_quotient(const SimpleElement& s, const SimpleElement& t) {
  return SimpleElement(s.strands, s.perm.inverse().compose(t.perm));
}

}  // namespace braidkit
