#pragma once

#include "braidkit/braid_word.hpp"
#include "braidkit/normal_form.hpp"

namespace braidkit {

// Membership in the positive braid monoid: infimum >= 0.
bool is_positive(const BraidWord& w);

// a divides b in the prefix order iff a^{-1} b is positive.
bool prefix_divides(const BraidWord& a, const BraidWord& b);

// Greatest common divisor / least common multiple for the prefix order,
// extended from the monoid to the whole group by an even Delta shift.
BraidWord gcd(const BraidWord& x, const BraidWord& y);
BraidWord lcm(const BraidWord& x, const BraidWord& y);

// gcd(1, x, x^2, ..., x^{k-1}); if x^k = 1 this element satisfies x d = d,
// so x d != d witnesses that x is not torsion.
BraidWord torsion_witness(const BraidWord& x, int k);

}  // namespace braidkit
