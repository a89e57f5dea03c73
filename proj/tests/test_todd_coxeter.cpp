#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "strata/presentation.hpp"
#include "strata/todd_coxeter.hpp"

using namespace strata;

namespace {

Presentation symmetric_presentation(int k) {
  Presentation p = builtin_presentation(BuiltinKind::artin, k);
  for (int g = 0; g < k - 1; ++g) p.add_relator(Word{{g, 1}, {g, 1}});
  return p;
}

Word s1_power(int e) { return Word(static_cast<std::size_t>(e), GenLetter{0, 1}); }

}  // namespace

TEST_CASE("orders of symmetric groups") {
  const std::size_t expected[] = {0, 1, 2, 6, 24, 120};
  for (int k = 2; k <= 5; ++k) {
    const auto t = todd_coxeter(symmetric_presentation(k), {});
    REQUIRE(t.complete());
    CHECK(t.coset_count() == expected[k]);
    CHECK(t.is_closed_and_consistent());
  }
}

TEST_CASE("central quotients of the top group") {
  const auto p = builtin_presentation(BuiltinKind::unordered_top, 3);
  CHECK(todd_coxeter(p, {s1_power(2)}).coset_count() == 6);
  CHECK(todd_coxeter(p, {s1_power(4)}).coset_count() == 12);
  const auto t = todd_coxeter(builtin_presentation(BuiltinKind::unordered_top, 4), {s1_power(6)});
  CHECK(t.complete());
  CHECK(t.coset_count() == 72);
  CHECK(t.is_closed_and_consistent());
}

TEST_CASE("whole group as subgroup") {
  const auto p = builtin_presentation(BuiltinKind::artin, 4);
  const auto t = todd_coxeter(p, {Word{{0, 1}}, Word{{1, 1}}, Word{{2, 1}}});
  CHECK(t.complete());
  CHECK(t.coset_count() == 1);
  const auto q = Presentation::parse("gens: a, b ; rels: a^5, b^7, a b A B");
  CHECK(todd_coxeter(q, {q.parse_word("a"), q.parse_word("b")}).coset_count() == 1);
  CHECK(todd_coxeter(q, {q.parse_word("a")}).coset_count() == 7);
  CHECK(todd_coxeter(q, {}).coset_count() == 35);
}

TEST_CASE("small finite groups") {
  // Dihedral of order 10, quaternion, and a trivial group in disguise.
  const auto d5 = Presentation::parse("gens: r, s ; rels: r^5, s^2, s r s r");
  CHECK(todd_coxeter(d5, {}).coset_count() == 10);
  const auto q8 = Presentation::parse("gens: i, j ; rels: i^4, i i J J, J i j i");
  CHECK(todd_coxeter(q8, {}).coset_count() == 8);
  const auto triv = Presentation::parse("gens: a, b ; rels: a b A B B, b a B A A");
  CHECK(todd_coxeter(triv, {}).coset_count() == 1);
}

TEST_CASE("cap is a normal outcome") {
  const auto z = Presentation::parse("gens: a ; rels:");
  const auto t = todd_coxeter(z, {}, 50);
  CHECK_FALSE(t.complete());
  CHECK(t.status() == EnumerationStatus::capped);
  CHECK(t.coset_count() <= 50 * 16 + 1024);
  const auto b3 = todd_coxeter(builtin_presentation(BuiltinKind::artin, 3), {}, 500);
  CHECK_FALSE(b3.complete());
  // A finite index still completes under a cap that is tight but sufficient.
  const auto s4 = todd_coxeter(symmetric_presentation(4), {}, 24);
  CHECK(s4.complete());
  CHECK(s4.coset_count() == 24);
}

TEST_CASE("trace follows the table") {
  const auto p = symmetric_presentation(3);
  const auto t = todd_coxeter(p, {Word{{0, 1}}});
  REQUIRE(t.coset_count() == 3);
  CHECK(t.trace(0, Word{{0, 1}}) == 0);
  CHECK(t.trace(0, Word{{1, 1}}) != 0);
  for (int c = 0; c < 3; ++c) {
    for (const auto& r : p.relators()) CHECK(t.trace(c, r) == c);
    CHECK(t.trace(t.act(c, {1, 1}), Word{{1, -1}}) == c);
  }
}
