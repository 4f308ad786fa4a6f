#include <doctest.h>

#include <cstdlib>
#include <random>

#include "braidkit/braid_word.hpp"
#include "braidkit/errors.hpp"
#include "braidkit/normal_form.hpp"
#include "common.hpp"

using namespace braidkit;

TEST_CASE("parse_word grammar") {
  CHECK(parse_word("1 2 -1", 3).letters == std::vector<int>{1, 2, -1});
  CHECK(parse_word("", 4).letters.empty());
  CHECK(parse_word("1,2,-1", 3).letters == std::vector<int>{1, 2, -1});
  CHECK(parse_word("a b A", 3).letters == std::vector<int>{1, 2, -1});
  CHECK(parse_word("c C", 4).letters == std::vector<int>{3, -3});
  CHECK_THROWS_AS(parse_word("3", 3), DomainError);
  CHECK_THROWS_AS(parse_word("0", 3), DomainError);
  CHECK_THROWS_AS(parse_word("x y z!", 9), DomainError);
  CHECK_THROWS_AS(parse_word("ab", 3), DomainError);
  CHECK_THROWS_AS(parse_word("1-2", 3), DomainError);  // not token-separated
  CHECK_THROWS_AS(parse_word("1x", 25), DomainError);
  CHECK_THROWS_AS(parse_word("-", 3), DomainError);
  CHECK(serialize(parse_word("a,B 3", 5)) == "1 -2 3");
}

TEST_CASE("free_reduce cancels adjacent inverse pairs only") {
  CHECK(free_reduce(parse_word("1 -1", 3)).empty());
  CHECK(free_reduce(parse_word("1 2 -2 1", 3)).letters == std::vector<int>{1, 1});
  const BraidWord frozen = parse_word("1 2 1 -2 -1", 3);
  CHECK(free_reduce(frozen) == frozen);
}

TEST_CASE("invert and concat") {
  CHECK(invert(parse_word("1 2", 3)).letters == std::vector<int>{-2, -1});
  CHECK(free_reduce(concat(parse_word("1", 3), parse_word("-1", 3))).empty());
  const BraidWord w = parse_word("2 -1 2", 3);
  CHECK(concat(BraidWord(3, {}), w) == w);
  CHECK_THROWS_AS(concat(BraidWord(3, {1}), BraidWord(4, {1})), DomainError);
}

TEST_CASE("exponent sum") {
  CHECK(exponent_sum(parse_word("1 2 1 3 2 1", 4)) == 6);  // Delta in B_4
  for (int n = 3; n <= 6; ++n) {
    BraidWord delta_gen(n, {});
    for (int i = 1; i < n; ++i) delta_gen = concat(delta_gen, BraidWord(n, {i}));
    for (int k = 1; k <= 3; ++k) {
      BraidWord pow(n, {});
      for (int j = 0; j < k; ++j) pow = concat(pow, delta_gen);
      CHECK(exponent_sum(pow) == (n - 1) * k);
      BraidWord eps = concat(BraidWord(n, {1}), delta_gen);
      BraidWord eps_pow(n, {});
      for (int j = 0; j < k; ++j) eps_pow = concat(eps_pow, eps);
      CHECK(exponent_sum(eps_pow) == n * k);
    }
  }
}

TEST_CASE("permutation of a word") {
  CHECK(permutation(parse_word("1", 3)).images() == std::vector<int>{2, 1, 3});
  CHECK(permutation(parse_word("1 1", 3)).is_identity());
  CHECK(permutation(parse_word("1 2", 3)).images() == std::vector<int>{2, 3, 1});
  CHECK(permutation(parse_word("-1 -2", 3)).images() == std::vector<int>{2, 3, 1});
}

TEST_CASE("apply_tau") {
  CHECK(apply_tau(parse_word("1", 3), 1).letters == std::vector<int>{2});
  CHECK(apply_tau(parse_word("1", 3), 2).letters == std::vector<int>{1});
  CHECK(apply_tau(parse_word("1 -3", 4), 1).letters == std::vector<int>{3, -1});
}

TEST_CASE("apply_tau is conjugation by a Delta power") {
  std::mt19937 rng(6006);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 2 + trial % 4;
    const int k = -3 + trial % 7;
    const BraidWord w = testutil::random_word(rng, n, 10);
    const BraidWord delta_word = nf_to_word(delta_power_nf(n, 1));
    BraidWord conj = w;
    for (int t = 0; t < std::abs(k); ++t)
      conj = k > 0 ? concat(concat(invert(delta_word), conj), delta_word)
                   : concat(concat(delta_word, conj), invert(delta_word));
    CHECK(equal(apply_tau(w, k), conj));
  }
}

TEST_CASE("word homomorphism properties") {
  std::mt19937 rng(20240901);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + trial % 4;
    const BraidWord a = testutil::random_word(rng, n, 12);
    const BraidWord b = testutil::random_word(rng, n, 9);
    CHECK(exponent_sum(concat(a, b)) == exponent_sum(a) + exponent_sum(b));
    CHECK(exponent_sum(invert(a)) == -exponent_sum(a));
    CHECK(permutation(concat(a, b)) == permutation(a).compose(permutation(b)));
    BraidWord unsigned_a = a;
    for (int& l : unsigned_a.letters) l = std::abs(l);
    CHECK(permutation(a) == permutation(unsigned_a));
    CHECK(apply_tau(apply_tau(a, 1), 1) == a);
  }
}
