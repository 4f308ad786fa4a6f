#pragma once

#include <compare>

#include "braidkit/braid_word.hpp"
#include "braidkit/permutation.hpp"

namespace braidkit {

// A permutation braid: a positive prefix of Delta, stored as its
// permutation (the correspondence is a bijection onto the symmetric
// group). The identity permutation is the trivial braid; the reversal
// permutation is Delta itself.
struct SimpleElement {
  int strands = 1;
  Permutation perm;

  SimpleElement() = default;
  SimpleElement(int n, Permutation p);

  bool is_identity() const { return perm.is_identity(); }
  bool is_delta() const;
  int length() const { return perm.inversions(); }  // positive word length

  friend bool operator==(const SimpleElement&, const SimpleElement&) = default;
  friend auto operator<=>(const SimpleElement&, const SimpleElement&) = default;
};

// The half twist Delta; word length n(n-1)/2, permutation k -> n+1-k.
SimpleElement delta(int n);

// sigma_i as a simple element.
SimpleElement atom(int n, int i);

// Canonical positive word: staircase form, placing the image values into
// positions n, n-1, ..., 1 with ascending runs of adjacent transpositions.
BraidWord to_word(const SimpleElement& s);

// Requires a positive word equal, as a braid, to a prefix of Delta;
// rejects words in which some strand pair crosses twice.
SimpleElement from_word(const BraidWord& w);

// Prefix-order divisibility by the atom sigma_i: true iff the inverse
// permutation has a descent at i. Validated against the brute-force
// divisor poset in the test suite.
bool left_divides_atom(int i, const SimpleElement& s);

// Suffix-order divisibility by sigma_i: descent of the permutation at i.
bool right_divides_atom(const SimpleElement& s, int i);

// Greatest common prefix / least common multiple in the divisor lattice
// of Delta. meet peels common atoms greedily; join goes through right
// complements.
SimpleElement meet(const SimpleElement& s, const SimpleElement& t);
SimpleElement join(const SimpleElement& s, const SimpleElement& t);

// The simple element c with s.c = Delta.
SimpleElement right_complement(const SimpleElement& s);

// Greatest common suffix, via the word-reversal anti-automorphism.
SimpleElement meet_right(const SimpleElement& s, const SimpleElement& t);

// Conjugation by Delta: Delta s Delta^{-1}.
SimpleElement flip(const SimpleElement& s);

// Word-reversal anti-automorphism; at the permutation level, inversion.
SimpleElement reverse(const SimpleElement& s);

// Product s*t assuming the result is simple (lengths must add up).
SimpleElement simple_product(const SimpleElement& s, const SimpleElement& t);

// Left quotient s^{-1}t assuming s left-divides t.
SimpleElement left_quotient(const SimpleElement& s, const SimpleElement& t);

}  // namespace braidkit
