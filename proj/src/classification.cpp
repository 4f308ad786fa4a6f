#include "braidkit/classification.hpp"

#include <utility>

#include "braidkit/errors.hpp"
#include "braidkit/normal_form.hpp"

namespace braidkit {

BraidWord delta_braid(int n) {
  if (n < 2) throw DomainError("delta needs n >= 2");
  std::vector<int> letters;
  for (int i = 1; i < n; ++i) letters.push_back(i);
  return BraidWord(n, std::move(letters));
}

BraidWord epsilon_braid(int n) {
  if (n < 2) throw DomainError("epsilon needs n >= 2");
  std::vector<int> letters{1};
  for (int i = 1; i < n; ++i) letters.push_back(i);
  return BraidWord(n, std::move(letters));
}

BraidWord power(const BraidWord& x, int k) {
  const BraidWord base = k >= 0 ? x : invert(x);
  BraidWord out(x.strands, {});
  for (int j = 0; j < (k >= 0 ? k : -k); ++j) out = concat(out, base);
  return out;
}

std::optional<PeriodicType> is_periodic(const BraidWord& x, std::size_t max_vertices) {
  const int n = x.strands;
  if (n == 1) return PeriodicType{PeriodicType::Base::delta, 0};
  const int s = exponent_sum(x);
  if (s % (n - 1) == 0) {
    const int k = s / (n - 1);
    if (are_conjugate(x, power(delta_braid(n), k), max_vertices))
      return PeriodicType{PeriodicType::Base::delta, k};
  }
  if (s % n == 0) {
    const int k = s / n;
    if (are_conjugate(x, power(epsilon_braid(n), k), max_vertices))
      return PeriodicType{PeriodicType::Base::epsilon, k};
  }
  return std::nullopt;
}

bool is_central(const BraidWord& x) {
  if (x.strands == 1) return true;
  const LeftNormalForm f = normal_form(x);
  if (!f.factors.empty()) return false;
  return x.strands == 2 || f.inf % 2 == 0;
}

}  // namespace braidkit
