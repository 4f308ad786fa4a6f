#include "braidkit/dehornoy.hpp"

#include <algorithm>
#include <cstdlib>
#include <utility>
#include <vector>

#include "braidkit/errors.hpp"

namespace braidkit {

namespace {

// Leftmost-ending handle: smallest q such that some p < q closes a
// handle at q. Scanning back from q, the nearest letter of index <= |w_q|
// must have the same index and opposite sign, with everything between of
// strictly larger index. A handle found this way is automatically
// innermost, hence reducible.
bool find_handle(const std::vector<int>& w, size_t& p_out, size_t& q_out) {
  for (size_t q = 1; q < w.size(); ++q) {
    const int i = std::abs(w[q]);
    for (size_t p = q; p-- > 0;) {
      const int j = std::abs(w[p]);
      if (j > i) continue;
      if (j == i && w[p] == -w[q]) {
        p_out = p;
        q_out = q;
        return true;
      }
      break;  // j < i, or same index with equal sign: no handle ends at q
    }
  }
  return false;
}

std::vector<int> reduce_free(std::vector<int> in) {
  std::vector<int> stack;
  stack.reserve(in.size());
  for (int letter : in) {
    if (!stack.empty() && stack.back() == -letter)
      stack.pop_back();
    else
      stack.push_back(letter);
  }
  return stack;
}

}  // namespace

BraidWord handle_reduce(const BraidWord& w, std::int64_t fuel) {
  std::vector<int> cur = reduce_free(w.letters);
  std::int64_t steps = 0;
  size_t p = 0, q = 0;
  while (find_handle(cur, p, q)) {
    if (++steps > fuel)
      throw ResourceError("handle reduction exceeded the fuel bound");
    const int i = std::abs(cur[p]);
    const int e = cur[p] > 0 ? 1 : -1;
    std::vector<int> next(cur.begin(), cur.begin() + static_cast<long>(p));
    for (size_t t = p + 1; t < q; ++t) {
      const int a = std::abs(cur[t]);
      if (a == i + 1) {
        // sigma_{i+1}^d -> sigma_{i+1}^{-e} sigma_i^d sigma_{i+1}^{e}
        const int d = cur[t] > 0 ? 1 : -1;
        next.push_back(-e * (i + 1));
        next.push_back(d * i);
        next.push_back(e * (i + 1));
      } else {
        next.push_back(cur[t]);
      }
    }
    next.insert(next.end(), cur.begin() + static_cast<long>(q) + 1, cur.end());
    cur = reduce_free(std::move(next));
  }
  return BraidWord(w.strands, std::move(cur));
}

OrderSign sign(const BraidWord& w, std::int64_t fuel) {
  const BraidWord reduced = handle_reduce(w, fuel);
  if (reduced.empty()) return OrderSign::zero;
  int lowest = w.strands;
  for (int letter : reduced.letters) lowest = std::min(lowest, std::abs(letter));
  int main_sign = 0;
  for (int letter : reduced.letters) {
    if (std::abs(letter) != lowest) continue;
    const int s = letter > 0 ? 1 : -1;
    if (main_sign == 0) main_sign = s;
    if (main_sign != s)
      throw ResourceError("internal consistency: mixed signs after handle reduction");
  }
  return main_sign > 0 ? OrderSign::positive : OrderSign::negative;
}

bool less(const BraidWord& a, const BraidWord& b, std::int64_t fuel) {
  require_same_strands(a, b);
  return sign(concat(invert(a), b), fuel) == OrderSign::positive;
}

}  // namespace braidkit
