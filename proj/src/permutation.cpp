#include "braidkit/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <utility>

#include "braidkit/errors.hpp"

namespace braidkit {

Permutation::Permutation(int n) {
  if (n < 1) throw DomainError("permutation size must be >= 1");
  img_.resize(static_cast<size_t>(n));
  std::iota(img_.begin(), img_.end(), 1);
}

Permutation Permutation::from_images(const std::vector<int>& images) {
  const int n = static_cast<int>(images.size());
  Permutation p(n < 1 ? 1 : n);
  if (n < 1) throw DomainError("permutation size must be >= 1");
  std::vector<bool> seen(static_cast<size_t>(n), false);
  for (int v : images) {
    if (v < 1 || v > n || seen[static_cast<size_t>(v) - 1])
      throw DomainError("image table is not a bijection of {1..n}");
    seen[static_cast<size_t>(v) - 1] = true;
  }
  p.img_ = images;
  return p;
}

Permutation Permutation::transposition(int n, int i) {
  Permutation p(n);
  if (i < 1 || i >= n) throw DomainError("transposition index out of range");
  std::swap(p.img_[static_cast<size_t>(i) - 1], p.img_[static_cast<size_t>(i)]);
  return p;
}

Permutation Permutation::reversal(int n) {
  Permutation p(n);
  std::reverse(p.img_.begin(), p.img_.end());
  return p;
}

Permutation Permutation::inverse() const {
  Permutation r(size());
  for (int k = 1; k <= size(); ++k) r.img_[static_cast<size_t>(apply(k)) - 1] = k;
  return r;
}

Permutation Permutation::compose(const Permutation& g) const {
  Permutation r(size());
  for (int k = 1; k <= size(); ++k) r.img_[static_cast<size_t>(k) - 1] = apply(g.apply(k));
  return r;
}

bool Permutation::is_identity() const {
  for (int k = 1; k <= size(); ++k)
    if (apply(k) != k) return false;
  return true;
}

int Permutation::inversions() const {
  int count = 0;
  for (size_t a = 0; a < img_.size(); ++a)
    for (size_t b = a + 1; b < img_.size(); ++b)
      if (img_[a] > img_[b]) ++count;
  return count;
}

void Permutation::swap_values(int i) {
  size_t pi = 0, pj = 0;
  for (size_t k = 0; k < img_.size(); ++k) {
    if (img_[k] == i) pi = k;
    if (img_[k] == i + 1) pj = k;
  }
  std::swap(img_[pi], img_[pj]);
}

void Permutation::swap_positions(int i) {
  std::swap(img_[static_cast<size_t>(i) - 1], img_[static_cast<size_t>(i)]);
}

std::vector<int> Permutation::cycle_type() const {
  std::vector<bool> seen(img_.size(), false);
  std::vector<int> lens;
  for (int k = 1; k <= size(); ++k) {
    if (seen[static_cast<size_t>(k) - 1]) continue;
    int len = 0, cur = k;
    while (!seen[static_cast<size_t>(cur) - 1]) {
      seen[static_cast<size_t>(cur) - 1] = true;
      cur = apply(cur);
      ++len;
    }
    lens.push_back(len);
  }
  std::sort(lens.rbegin(), lens.rend());
  return lens;
}

}  // namespace braidkit
