#pragma once

#include <compare>
#include <vector>

#include "braidkit/braid_word.hpp"
#include "braidkit/simple_element.hpp"

namespace braidkit {

// Left normal form Delta^inf a_1 ... a_r with proper, left-weighted
// simple factors. Structural equality decides braid equality.
struct LeftNormalForm {
  int strands = 1;
  int inf = 0;
  std::vector<SimpleElement> factors;

  int canonical_length() const { return static_cast<int>(factors.size()); }
  int sup() const { return inf + canonical_length(); }
  bool is_trivial() const { return inf == 0 && factors.empty(); }

  friend bool operator==(const LeftNormalForm&, const LeftNormalForm&) = default;
  friend auto operator<=>(const LeftNormalForm&, const LeftNormalForm&) = default;
};

LeftNormalForm normal_form(const BraidWord& w);
LeftNormalForm nf_of_simple(const SimpleElement& s);
LeftNormalForm delta_power_nf(int strands, int power);

// Delta^{|inf|} words followed by the factor words; a normal_form fixed point.
BraidWord nf_to_word(const LeftNormalForm& f);

// The word problem: same braid element iff identical normal forms.
bool equal(const BraidWord& a, const BraidWord& b);

LeftNormalForm product(const LeftNormalForm& a, const LeftNormalForm& b);
LeftNormalForm inverse(const LeftNormalForm& a);

namespace detail {

// Accumulates Delta^p a_1...a_r with arbitrary simple factors, pushing
// Delta powers to the left as they arrive; normalize() finishes the job.
class NormalFormBuilder {
 public:
  explicit NormalFormBuilder(int strands) : strands_(strands) {}

  void append_simple(const SimpleElement& s);
  void append_delta_power(int k);
  void append_letter(int letter);

  LeftNormalForm finish();

 private:
  int strands_;
  int inf_ = 0;
  std::vector<SimpleElement> factors_;
};

}  // namespace detail

}  // namespace braidkit
