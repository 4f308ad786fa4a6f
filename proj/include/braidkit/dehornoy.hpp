#pragma once

#include <cstdint>

#include "braidkit/braid_word.hpp"

namespace braidkit {

inline constexpr std::int64_t kDefaultFuel = 1'000'000;

enum class OrderSign { negative, zero, positive };

// Dehornoy handle reduction. The output represents the same braid and
// contains no handle sigma_i^e v sigma_i^{-e} with v using only indices
// greater than i; consequently the lowest-index generator present occurs
// with a single sign. Termination is a theorem; the fuel bound guards
// against implementation mistakes and raises ResourceError when hit.
BraidWord handle_reduce(const BraidWord& w, std::int64_t fuel = kDefaultFuel);

// Trichotomy sign: zero iff trivial, positive iff in the sigma-positive cone.
OrderSign sign(const BraidWord& w, std::int64_t fuel = kDefaultFuel);

// Left-invariant total order: a < b iff a^{-1} b is sigma-positive.
bool less(const BraidWord& a, const BraidWord& b, std::int64_t fuel = kDefaultFuel);

}  // namespace braidkit
