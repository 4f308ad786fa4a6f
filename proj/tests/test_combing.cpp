#include <doctest.h>

#include <random>

#include "braidkit/artin_action.hpp"
#include "braidkit/combing.hpp"
#include "braidkit/errors.hpp"
#include "braidkit/json_io.hpp"
#include "braidkit/normal_form.hpp"
#include "common.hpp"

using namespace braidkit;

TEST_CASE("is_pure") {
  CHECK(is_pure(parse_word("1 1", 3)));
  CHECK_FALSE(is_pure(parse_word("1", 3)));
  CHECK(is_pure(parse_word("1 2 1 2 1 2", 3)));
}

TEST_CASE("pure generators") {
  CHECK(pure_generator(2, 3) == parse_word("2 2", 3));
  CHECK(pure_generator(1, 3) == parse_word("-2 1 1 2", 3));
  CHECK(pure_generator(3, 5) == parse_word("-4 3 3 4", 5));
  for (int ambient = 2; ambient <= 6; ++ambient)
    for (int i = 1; i < ambient; ++i) CHECK(is_pure(pure_generator(i, ambient)));
  CHECK_THROWS_AS(pure_generator(3, 3), DomainError);
}

TEST_CASE("remove_last_strand") {
  CHECK(remove_last_strand(parse_word("1 1", 3)) == parse_word("1 1", 2));
  CHECK(remove_last_strand(pure_generator(1, 3)).empty());
  CHECK(remove_last_strand(pure_generator(2, 3)).empty());
  CHECK_THROWS_AS(remove_last_strand(parse_word("2", 3)), DomainError);
  // Homomorphism on the subgroup where defined.
  std::mt19937 rng(808);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 3 + trial % 3;
    const BraidWord a = testutil::random_pure_word(rng, n, 8);
    const BraidWord b = testutil::random_pure_word(rng, n, 8);
    CHECK(equal(remove_last_strand(concat(a, b)),
                concat(remove_last_strand(a), remove_last_strand(b))));
  }
}

TEST_CASE("remove_last_strand is well defined on braid classes") {
  std::mt19937 rng(616);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 3 + trial % 3;
    const BraidWord w = testutil::random_pure_word(rng, n, 8);
    const BraidWord shuffled = testutil::shuffle_by_relations(w, 30, rng);
    CHECK(equal(remove_last_strand(w), remove_last_strand(shuffled)));
  }
}

TEST_CASE("include_strand is a section") {
  std::mt19937 rng(9001);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 2 + trial % 4;
    const BraidWord w = testutil::random_word(rng, n, 10);
    CHECK(include_strand(w).strands == n + 1);
    CHECK(remove_last_strand(include_strand(w)) == w);
  }
  CHECK(include_strand(BraidWord(4, {})).empty());
}

TEST_CASE("comb pinned examples") {
  for (int n = 3; n <= 5; ++n) {
    const CombingCoordinates c = comb(BraidWord(n, {n - 1, n - 1}));
    REQUIRE(c.levels.size() == static_cast<size_t>(n - 1));
    CHECK(c.levels[0] == FreeWord(n - 1, {n - 1}));
    for (size_t t = 1; t < c.levels.size(); ++t) CHECK(c.levels[t].empty());
  }
  CHECK(comb(BraidWord(4, {})).all_trivial());
  const CombingCoordinates c = comb(pure_generator(1, 3));
  REQUIRE(c.levels.size() == 2);
  CHECK(c.levels[0] == FreeWord(2, {1}));
  CHECK(c.levels[1].empty());
  CHECK_THROWS_AS(comb(parse_word("1", 3)), DomainError);
}

TEST_CASE("is_trivial_pure") {
  CHECK_FALSE(is_trivial_pure(parse_word("1 1 2 2 -1 -1 -2 -2", 3)));
  CHECK(is_trivial_pure(parse_word("1 2 1 -2 -1 -2", 3)));
  CHECK(is_trivial_pure(BraidWord(3, {})));
}

TEST_CASE("reconstruction through iota") {
  std::mt19937 rng(121212);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 3 + trial % 3;
    BraidWord w = testutil::random_pure_word(rng, n, 8 + trial % 6);
    if (trial % 4 == 0) {
      const BraidWord u = testutil::random_word(rng, n, 6);
      w = testutil::shuffle_by_relations(concat(u, invert(u)), 30, rng);
    }
    const CombingCoordinates c = comb(w);
    CHECK(equal(evaluate_combing(c, n), w));
    CHECK(is_trivial_pure(w) == equal(w, BraidWord(n, {})));
  }
}

TEST_CASE("split exact sequence semantics") {
  std::mt19937 rng(77);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 3 + trial % 3;
    // Kernel elements: remove_last_strand kills them; the top coordinate
    // is trivial iff the element is.
    const FreeWord f(n - 1, testutil::random_word(rng, n, 5).letters);
    BraidWord k(n, {});
    for (int a : f.letters) {
      const BraidWord gen = pure_generator(a < 0 ? -a : a, n);
      k = concat(k, a < 0 ? invert(gen) : gen);
    }
    CHECK(equal(remove_last_strand(k), BraidWord(n - 1, {})));
    CHECK(is_trivial_pure(k) == f.empty());
    // Included elements: trivial top coordinate; exactness means both
    // projections trivial forces the braid to be trivial.
    const BraidWord u = testutil::random_pure_word(rng, n - 1, 8);
    const BraidWord emb = include_strand(u);
    const CombingCoordinates c = comb(emb);
    CHECK(c.levels[0].empty());
    if (equal(remove_last_strand(emb), BraidWord(n - 1, {})) && c.levels[0].empty())
      CHECK(equal(emb, BraidWord(n, {})));
  }
}

TEST_CASE("combing JSON rendering") {
  const nlohmann::json j = to_json(comb(BraidWord(3, {2, 2})));
  CHECK(j["levels"][0]["rank"] == 2);
  CHECK(j["levels"][0]["word"] == nlohmann::json::array({2}));
  CHECK(j["levels"][1]["rank"] == 1);
  CHECK(j["levels"][1]["word"] == nlohmann::json::array());
}
