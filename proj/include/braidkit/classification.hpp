#pragma once

#include <cstddef>
#include <optional>

#include "braidkit/braid_word.hpp"
#include "braidkit/conjugacy.hpp"

namespace braidkit {

// The standard periodic elements: delta = sigma_1...sigma_{n-1} and
// epsilon = sigma_1 (sigma_1...sigma_{n-1}); delta^n = epsilon^{n-1} = Delta^2.
BraidWord delta_braid(int n);
BraidWord epsilon_braid(int n);

// k-fold concatenation (of the inverse for k < 0).
BraidWord power(const BraidWord& x, int k);

struct PeriodicType {
  enum class Base { delta, epsilon };
  Base base = Base::delta;
  int power = 0;
};

// Exponent-sum gate followed by a conjugacy test against the matching
// power of delta or epsilon; empty when x is not periodic.
std::optional<PeriodicType> is_periodic(const BraidWord& x,
                                        std::size_t max_vertices = kDefaultVertexCap);

// Center membership: Delta^even for n > 2, all of B_2 = <Delta>, all of B_1.
bool is_central(const BraidWord& x);

}  // namespace braidkit
