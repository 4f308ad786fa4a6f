#include "braidkit/lattice.hpp"

#include <algorithm>
#include <utility>

#include "braidkit/errors.hpp"
#include "braidkit/simple_element.hpp"

namespace braidkit {

namespace {

// sigma_i divides a positive braid iff it divides its first factor.
bool atom_divides(int i, const LeftNormalForm& a) {
  if (a.inf >= 1) return true;
  if (a.factors.empty()) return false;
  return left_divides_atom(i, a.factors.front());
}

LeftNormalForm strip_atom(int i, const LeftNormalForm& a) {
  detail::NormalFormBuilder builder(a.strands);
  if (a.inf >= 1) {
    // sigma_i^{-1} Delta^p = (complement of sigma_i) Delta^{p-1}
    builder.append_simple(right_complement(atom(a.strands, i)));
    builder.append_delta_power(a.inf - 1);
    for (const SimpleElement& f : a.factors) builder.append_simple(f);
  } else {
    builder.append_simple(left_quotient(atom(a.strands, i), a.factors.front()));
    for (size_t k = 1; k < a.factors.size(); ++k) builder.append_simple(a.factors[k]);
  }
  return builder.finish();
}

// gcd inside the positive monoid, by greedy common-atom peeling; the
// peeled letters are a word for the result.
BraidWord positive_gcd(LeftNormalForm a, LeftNormalForm b) {
  const int n = a.strands;
  std::vector<int> letters;
  for (;;) {
    int found = 0;
    for (int i = 1; i < n; ++i) {
      if (atom_divides(i, a) && atom_divides(i, b)) {
        found = i;
        break;
      }
    }
    if (!found) break;
    letters.push_back(found);
    a = strip_atom(found, a);
    b = strip_atom(found, b);
  }
  return BraidWord(n, std::move(letters));
}

BraidWord delta_word_power(int n, int k) {
  const BraidWord dw = to_word(delta(n));
  const BraidWord base = k >= 0 ? dw : invert(dw);
  BraidWord out(n, {});
  for (int j = 0; j < (k >= 0 ? k : -k); ++j) out = concat(out, base);
  return out;
}

BraidWord reverse_word(const BraidWord& w) {
  std::vector<int> letters(w.letters.rbegin(), w.letters.rend());
  return BraidWord(w.strands, std::move(letters));
}

}  // namespace

bool is_positive(const BraidWord& w) { return normal_form(w).inf >= 0; }

bool prefix_divides(const BraidWord& a, const BraidWord& b) {
  require_same_strands(a, b);
  return is_positive(concat(invert(a), b));
}

BraidWord gcd(const BraidWord& x, const BraidWord& y) {
  require_same_strands(x, y);
  LeftNormalForm a = normal_form(x), b = normal_form(y);
  const int low = std::min(a.inf, b.inf);
  const int shift = low < 0 ? 2 * ((-low + 1) / 2) : 0;
  a.inf += shift;
  b.inf += shift;
  const BraidWord positive_part = positive_gcd(std::move(a), std::move(b));
  return concat(delta_word_power(x.strands, -shift), positive_part);
}

BraidWord lcm(const BraidWord& x, const BraidWord& y) {
  require_same_strands(x, y);
  const LeftNormalForm xi = inverse(normal_form(x)), yi = inverse(normal_form(y));
  const int low = std::min(xi.inf, yi.inf);
  const int shift = low < 0 ? 2 * ((-low + 1) / 2) : 0;
  const BraidWord a = concat(nf_to_word(xi), delta_word_power(x.strands, shift));
  const BraidWord b = concat(nf_to_word(yi), delta_word_power(x.strands, shift));
  // Greatest common suffix via the reversal anti-automorphism.
  const BraidWord suffix_gcd = reverse_word(gcd(reverse_word(a), reverse_word(b)));
  return concat(delta_word_power(x.strands, shift), invert(suffix_gcd));
}

BraidWord torsion_witness(const BraidWord& x, int k) {
  if (k < 1) throw DomainError("torsion_witness requires k >= 1");
  BraidWord d(x.strands, {});
  BraidWord cur(x.strands, {});
  for (int j = 1; j < k; ++j) {
    cur = concat(cur, x);
    d = gcd(d, cur);
  }
  return d;
}

}  // namespace braidkit
