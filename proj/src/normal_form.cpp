#include "braidkit/normal_form.hpp"

#include <utility>

#include "braidkit/errors.hpp"

namespace braidkit {

namespace detail {

void NormalFormBuilder::append_simple(const SimpleElement& s) {
  if (s.strands != strands_) throw DomainError("strand-count mismatch in builder");
  if (!s.is_identity()) factors_.push_back(s);
}

void NormalFormBuilder::append_delta_power(int k) {
  if (k % 2 != 0)
    for (SimpleElement& f : factors_) f = flip(f);
  inf_ += k;
}

void NormalFormBuilder::append_letter(int letter) {
  const int i = letter < 0 ? -letter : letter;
  if (i < 1 || i >= strands_) throw DomainError("letter index out of range");
  if (letter > 0) {
    append_simple(atom(strands_, i));
  } else {
    // sigma_i^{-1} = (right complement of sigma_i) Delta^{-1}
    append_simple(right_complement(atom(strands_, i)));
    append_delta_power(-1);
  }
}

LeftNormalForm NormalFormBuilder::finish() {
  // Left-weight by local transformations until stable: move the largest
  // simple prefix of each a_{i+1} that keeps a_i simple into a_i, drop
  // identity factors, absorb leading Deltas into the infimum.
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t i = 0; i + 1 < factors_.size(); ++i) {
      if (factors_[i + 1].is_identity()) continue;
      const SimpleElement s = meet(right_complement(factors_[i]), factors_[i + 1]);
      if (!s.is_identity()) {
        factors_[i] = simple_product(factors_[i], s);
        factors_[i + 1] = left_quotient(s, factors_[i + 1]);
        changed = true;
      }
    }
    size_t kept = 0;
    for (size_t i = 0; i < factors_.size(); ++i)
      if (!factors_[i].is_identity()) factors_[kept++] = factors_[i];
    if (kept != factors_.size()) {
      factors_.resize(kept);
      changed = true;
    }
    size_t lead = 0;
    while (lead < factors_.size() && factors_[lead].is_delta()) ++lead;
    if (lead > 0) {
      inf_ += static_cast<int>(lead);
      factors_.erase(factors_.begin(), factors_.begin() + static_cast<long>(lead));
      changed = true;
    }
  }
  LeftNormalForm f;
  f.strands = strands_;
  f.inf = inf_;
  f.factors = std::move(factors_);
  inf_ = 0;
  factors_.clear();
  return f;
}

}  // namespace detail

LeftNormalForm normal_form(const BraidWord& w) {
  detail::NormalFormBuilder builder(w.strands);
  for (int letter : w.letters) builder.append_letter(letter);
  return builder.finish();
}

LeftNormalForm nf_of_simple(const SimpleElement& s) {
  detail::NormalFormBuilder builder(s.strands);
  builder.append_simple(s);
  return builder.finish();
}

LeftNormalForm delta_power_nf(int strands, int power) {
  LeftNormalForm f;
  f.strands = strands;
  f.inf = power;
  return f;
}

BraidWord nf_to_word(const LeftNormalForm& f) {
  const BraidWord delta_word = to_word(delta(f.strands));
  BraidWord out(f.strands, {});
  if (f.inf >= 0) {
    for (int k = 0; k < f.inf; ++k) out = concat(out, delta_word);
  } else {
    const BraidWord delta_inv = invert(delta_word);
    for (int k = 0; k < -f.inf; ++k) out = concat(out, delta_inv);
  }
  for (const SimpleElement& a : f.factors) out = concat(out, to_word(a));
  return out;
}

bool equal(const BraidWord& a, const BraidWord& b) {
  require_same_strands(a, b);
  return normal_form(a) == normal_form(b);
}

LeftNormalForm product(const LeftNormalForm& a, const LeftNormalForm& b) {
  if (a.strands != b.strands) throw DomainError("strand-count mismatch in product");
  detail::NormalFormBuilder builder(a.strands);
  builder.append_delta_power(a.inf);
  for (const SimpleElement& f : a.factors) builder.append_simple(f);
  builder.append_delta_power(b.inf);
  for (const SimpleElement& f : b.factors) builder.append_simple(f);
  return builder.finish();
}

LeftNormalForm inverse(const LeftNormalForm& a) {
  detail::NormalFormBuilder builder(a.strands);
  for (auto it = a.factors.rbegin(); it != a.factors.rend(); ++it) {
    builder.append_simple(right_complement(*it));
    builder.append_delta_power(-1);
  }
  builder.append_delta_power(-a.inf);
  return builder.finish();
}

}  // namespace braidkit
