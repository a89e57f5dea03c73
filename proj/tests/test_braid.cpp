#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "strata/braid_word.hpp"
#include "strata/permutation.hpp"
#include "support.hpp"

using namespace strata;

namespace {

// Independent reading of the composition convention: physically swap the
// entries of an arrangement, letter by letter.
std::vector<int> simulate_swaps(const BraidWord& b) {
  std::vector<int> arrangement(b.strands());
  for (int j = 0; j < b.strands(); ++j) arrangement[j] = j + 1;
  for (const auto& l : b.letters()) std::swap(arrangement[l.index - 1], arrangement[l.index]);
  return arrangement;
}

}  // namespace

TEST_CASE("permutation basics") {
  CHECK_THROWS_AS(Permutation({1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(Permutation({0, 1}), std::invalid_argument);
  const Permutation p({2, 3, 1});
  CHECK(p.then(p.inverse()).is_identity());
  CHECK(p.inverse().then(p).is_identity());
  CHECK(p.inversions() == 2);
  CHECK(Permutation::reversal(4).inversions() == 6);
  CHECK(Permutation::parse("2 3 1") == p);
  CHECK(p.to_string() == "2 3 1");
  CHECK(Permutation::transposition(3, 1, 3) == Permutation({3, 2, 1}));
}

TEST_CASE("word syntax round trip") {
  const auto w = BraidWord::parse(4, "s1 s2^-1 s3^2");
  CHECK(w.length() == 4);
  CHECK(w.to_string() == "s1 s2^-1 s3 s3");
  CHECK(BraidWord::parse(4, w.to_string()) == w);
  CHECK(BraidWord(3).to_string() == "e");
  CHECK(BraidWord::parse(3, "e").empty());
  CHECK(BraidWord::parse(3, "delta") == delta_word(3));
  CHECK(BraidWord::parse(3, "delta^-1") == inverse(delta_word(3)));
  CHECK(BraidWord::parse(3, "a[1,3]") == pure_generator(PureGeneratorId(1, 3, 3)));
  CHECK_THROWS_AS(BraidWord::parse(3, "s3"), std::invalid_argument);
  CHECK_THROWS_AS(BraidWord::parse(3, "s0"), std::invalid_argument);
  CHECK_THROWS_AS(BraidWord::parse(3, "x1"), std::invalid_argument);
  CHECK_THROWS_AS(BraidWord::parse(3, "s1^"), std::invalid_argument);
  CHECK_THROWS_AS(BraidWord(3, {{3, 1}}), std::invalid_argument);
}

TEST_CASE("multiply and inverse") {
  const BraidWord s1(3, {{1, 1}});
  const BraidWord s2(3, {{2, 1}});
  CHECK(multiply(s1, inverse(s1)).to_string() == "s1 s1^-1");
  CHECK(multiply(BraidWord(3), s2) == s2);
  CHECK(multiply(multiply(s1, s2), s1).to_string() == "s1 s2 s1");
  CHECK_THROWS_AS(multiply(s1, BraidWord(4)), std::invalid_argument);
  CHECK(inverse(BraidWord::parse(3, "s1 s2")).to_string() == "s2^-1 s1^-1");
  CHECK(inverse(BraidWord(3)).empty());
  CHECK(inverse(BraidWord::parse(3, "s1^-1")).to_string() == "s1");
  CHECK(power(s1, -2).to_string() == "s1^-1 s1^-1");
}

TEST_CASE("pure generators") {
  CHECK(pure_generator(PureGeneratorId(1, 2, 3)).to_string() == "s1 s1");
  CHECK(pure_generator(PureGeneratorId(1, 3, 3)).to_string() == "s2 s1 s1 s2^-1");
  CHECK(pure_generator(PureGeneratorId(2, 4, 5)).to_string() == "s3 s2 s2 s3^-1");
  CHECK_THROWS_AS(PureGeneratorId(2, 2, 3), std::invalid_argument);
  CHECK_THROWS_AS(PureGeneratorId(1, 4, 3), std::invalid_argument);
  for (int k = 2; k <= 6; ++k) {
    for (int i = 1; i <= k; ++i) {
      for (int j = i + 1; j <= k; ++j) CHECK(permutation_image(pure_generator(PureGeneratorId(i, j, k))).is_identity());
    }
  }
}

TEST_CASE("half twist and full twist words") {
  CHECK(delta_word(2).to_string() == "s1");
  CHECK(permutation_image(delta_word(3)) == Permutation({3, 2, 1}));
  CHECK_THROWS_AS(delta_word(1), std::invalid_argument);
  CHECK_THROWS_AS(d_word(1), std::invalid_argument);
  CHECK(d_word(2).to_string() == "s1 s1");
  for (int k = 2; k <= 7; ++k) {
    CHECK(exponent_sum(delta_word(k)) == k * (k - 1) / 2);
    CHECK(static_cast<int>(delta_word(k).length()) == k * (k - 1) / 2);
    CHECK(permutation_image(delta_word(k)) == Permutation::reversal(k));
    CHECK(exponent_sum(d_word(k)) == k * (k - 1));
    CHECK(permutation_image(d_word(k)).is_identity());
  }
  CHECK(exponent_sum(delta_word(4)) == 6);
}

TEST_CASE("permutation image follows the swap convention") {
  CHECK(permutation_image(BraidWord::parse(3, "s1")) == Permutation({2, 1, 3}));
  CHECK(permutation_image(BraidWord::parse(3, "s1 s2")) == Permutation({2, 3, 1}));
  CHECK(permutation_image(d_word(4)).is_identity());
  std::mt19937_64 rng(11);
  for (int t = 0; t < 500; ++t) {
    const int k = 2 + static_cast<int>(rng() % 6);
    const auto u = support::random_braid(rng, k, static_cast<int>(rng() % 20));
    const auto v = support::random_braid(rng, k, static_cast<int>(rng() % 20));
    CHECK(permutation_image(u).images() == simulate_swaps(u));
    CHECK(permutation_image(multiply(u, v)) == permutation_image(u).then(permutation_image(v)));
  }
}

TEST_CASE("exponent sum") {
  CHECK(exponent_sum(BraidWord(3)) == 0);
  CHECK(exponent_sum(BraidWord::parse(3, "s1 s2^-1")) == 0);
  CHECK(exponent_sum(BraidWord::parse(4, "s1^3 s3^-1")) == 2);
}

TEST_CASE("permutation image and exponent sum ignore relators") {
  std::mt19937_64 rng(12);
  for (int t = 0; t < 2000; ++t) {
    const int k = 2 + static_cast<int>(rng() % 5);
    const auto u = support::random_braid(rng, k, static_cast<int>(rng() % 30));
    const auto v = support::insert_relators(rng, u, support::braid_relators(k), 1 + static_cast<int>(rng() % 4));
    CHECK(permutation_image(u) == permutation_image(v));
    CHECK(exponent_sum(u) == exponent_sum(v));
  }
}
