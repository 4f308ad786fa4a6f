#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "braidkit/braid_word.hpp"
#include "braidkit/normal_form.hpp"
#include "braidkit/simple_element.hpp"

namespace braidkit {

inline constexpr std::size_t kDefaultVertexCap = 100'000;

// Preferred prefix p(x) = (Delta^p x_1 Delta^{-p}) ^ (x_r^{-1} Delta);
// trivial when there are no factors.
SimpleElement preferred_prefix(const LeftNormalForm& f);

// One cyclic sliding step: conjugation by the preferred prefix. Returns
// the slid element together with the conjugator.
std::pair<LeftNormalForm, SimpleElement> cyclic_slide(const LeftNormalForm& f);

struct SlideResult {
  LeftNormalForm representative;  // first element of the periodic orbit reached
  BraidWord conjugator;           // conjugates the input to the representative
  int period = 1;                 // length of the sliding circuit
};

SlideResult slide_to_circuit(const BraidWord& x);
SlideResult slide_to_circuit(const LeftNormalForm& f);

// The full set of sliding circuits in the conjugacy class, closed under
// conjugation by nontrivial simple elements; connected by the theory.
// Vertices are sorted canonically; edge conjugators satisfy
// c^{-1} * from * c = to. base_conjugator maps the input to the base vertex.
struct SlidingCircuitGraph {
  struct Edge {
    int from = 0;
    int to = 0;
    BraidWord conjugator;
  };

  int strands = 1;
  std::vector<LeftNormalForm> vertices;
  std::vector<Edge> edges;
  int base = 0;
  BraidWord base_conjugator;
};

SlidingCircuitGraph sliding_circuits(const BraidWord& x,
                                     std::size_t max_vertices = kDefaultVertexCap);

// Conjugacy decision and search: a conjugator c with c^{-1} x c = y, or
// empty. Every returned conjugator is verified before being returned.
std::optional<BraidWord> are_conjugate(const BraidWord& x, const BraidWord& y,
                                       std::size_t max_vertices = kDefaultVertexCap);

// Loop generators of the sliding-circuit graph, transported back to the
// input: every returned element commutes with x (verified).
std::vector<BraidWord> centralizer_generators(const BraidWord& x,
                                              std::size_t max_vertices = kDefaultVertexCap);

}  // namespace braidkit
