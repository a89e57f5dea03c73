#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <random>

#include "strata/presentation.hpp"
#include "strata/smith.hpp"

using namespace strata;

namespace {

long long det(const std::vector<std::vector<long long>>& m) {
  const std::size_t n = m.size();
  if (n == 1) return m[0][0];
  long long out = 0;
  for (std::size_t c = 0; c < n; ++c) {
    std::vector<std::vector<long long>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<long long> row;
      for (std::size_t cc = 0; cc < n; ++cc) {
        if (cc != c) row.push_back(m[r][cc]);
      }
      minor.push_back(row);
    }
    out += ((c % 2) ? -1 : 1) * m[0][c] * det(minor);
  }
  return out;
}

void choose(std::size_t n, std::size_t r, std::size_t from, std::vector<std::size_t>& cur,
            std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == r) {
    out.push_back(cur);
    return;
  }
  for (std::size_t x = from; x < n; ++x) {
    cur.push_back(x);
    choose(n, r, x + 1, cur, out);
    cur.pop_back();
  }
}

// Determinantal divisors: gcd of all r×r minors. d_1⋯d_r equals this.
long long minor_gcd(const std::vector<std::vector<long long>>& m, std::size_t r) {
  std::vector<std::vector<std::size_t>> rows;
  std::vector<std::vector<std::size_t>> cols;
  std::vector<std::size_t> cur;
  choose(m.size(), r, 0, cur, rows);
  choose(m[0].size(), r, 0, cur, cols);
  long long g = 0;
  for (const auto& rs : rows) {
    for (const auto& cs : cols) {
      std::vector<std::vector<long long>> sub;
      for (auto a : rs) {
        std::vector<long long> row;
        for (auto b : cs) row.push_back(m[a][b]);
        sub.push_back(row);
      }
      g = std::gcd(g, std::llabs(det(sub)));
    }
  }
  return g;
}

std::vector<long> as_longs(const std::vector<BigInt>& v) {
  std::vector<long> out;
  for (const auto& x : v) out.push_back(static_cast<long>(x));
  return out;
}

}  // namespace

TEST_CASE("smith normal form examples") {
  CHECK(as_longs(smith_normal_form(IntegerMatrix::from_rows({{1, 0}, {0, 1}}))) == std::vector<long>{1, 1});
  CHECK(as_longs(smith_normal_form(IntegerMatrix::from_rows({{2, 0}, {0, 3}}))) == std::vector<long>{1, 6});
  CHECK(smith_normal_form(IntegerMatrix::from_rows({{0, 0, 0}})).empty());
  CHECK(as_longs(smith_normal_form(IntegerMatrix::from_rows({{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}}))) ==
        std::vector<long>{2, 6, 12});
  CHECK_THROWS_AS(IntegerMatrix(2, 2, {1, 2, 3}), std::invalid_argument);
  CHECK_THROWS_AS(IntegerMatrix::from_rows({{1, 2}, {3}}), std::invalid_argument);
}

TEST_CASE("divisibility chain and minor gcds on random 3x3 matrices") {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<int> entry(-5, 5);
  for (int t = 0; t < 1500; ++t) {
    std::vector<std::vector<long long>> m(3, std::vector<long long>(3));
    std::vector<std::vector<long>> rows(3, std::vector<long>(3));
    for (int r = 0; r < 3; ++r) {
      for (int c = 0; c < 3; ++c) rows[r][c] = m[r][c] = entry(rng);
    }
    const auto d = smith_normal_form(IntegerMatrix::from_rows(rows));
    for (std::size_t i = 0; i + 1 < d.size(); ++i) CHECK(d[i + 1] % d[i] == 0);
    long long product = 1;
    for (std::size_t r = 1; r <= 3; ++r) {
      const long long g = minor_gcd(m, r);
      if (r <= d.size()) {
        product *= static_cast<long long>(d[r - 1]);
        CHECK(g == product);
      } else {
        CHECK(g == 0);
      }
    }
  }
}

TEST_CASE("unbounded entries") {
  IntegerMatrix m(2, 2);
  m.at(0, 0) = BigInt(1) << 100;
  m.at(1, 1) = (BigInt(1) << 90) * 3;
  const auto d = smith_normal_form(m);
  REQUIRE(d.size() == 2);
  CHECK(d[0] == BigInt(1) << 90);
  CHECK(d[1] == (BigInt(1) << 100) * 3);
}

TEST_CASE("abelianization examples") {
  for (int k = 2; k <= 6; ++k) {
    CHECK(abelianization(builtin_presentation(BuiltinKind::artin, k)) == AbelianInvariants{1, {}});
  }
  for (int k = 3; k <= 5; ++k) {
    CHECK(abelianization(builtin_presentation(BuiltinKind::braid_mod_delta_sq, k)) ==
          AbelianInvariants{0, {BigInt(k * (k - 1))}});
    CHECK(abelianization(builtin_presentation(BuiltinKind::pure_braid_mod_d, k)) ==
          AbelianInvariants{k * (k - 1) / 2 - 1, {}});
    CHECK(abelianization(builtin_presentation(BuiltinKind::pure_braid, k)) == AbelianInvariants{k * (k - 1) / 2, {}});
  }
  CHECK(abelianization(builtin_presentation(BuiltinKind::pure_braid_mod_d, 2)).is_trivial());
  CHECK(abelianization(builtin_presentation(BuiltinKind::unordered_top, 3)).to_string() == "Z");
  CHECK(abelianization(builtin_presentation(BuiltinKind::braid_mod_delta_sq, 3)).to_string() == "Z/6");
  CHECK(abelianization(Presentation::parse("gens: a, b, c ; rels: a^4 b^2, b^6")).to_string() == "Z x Z/2 x Z/12");
}

TEST_CASE("abelianization is invariant under Tietze moves") {
  std::mt19937_64 rng(4);
  const std::vector<Presentation> bases = {
      builtin_presentation(BuiltinKind::artin, 4), builtin_presentation(BuiltinKind::braid_mod_delta_sq, 4),
      builtin_presentation(BuiltinKind::pure_braid_mod_d, 4), builtin_presentation(BuiltinKind::unordered_top, 4)};
  for (const auto& base : bases) {
    const auto expected = abelianization(base);
    for (int t = 0; t < 25; ++t) {
      Presentation p = base;
      // A redundant relator: a conjugate of a product of existing relators.
      const auto& r1 = p.relators()[rng() % p.relators().size()];
      const auto& r2 = p.relators()[rng() % p.relators().size()];
      Word conj;
      for (int s = 0; s < 3; ++s) conj.push_back({static_cast<int>(rng() % p.generator_count()), (rng() % 2) ? 1 : -1});
      p.add_relator(concat(concat(conj, concat(r1, inverse(r2))), inverse(conj)));
      CHECK(abelianization(p) == expected);
      // A new generator with a defining relator x = w.
      Word w;
      for (int s = 0; s < 4; ++s) w.push_back({static_cast<int>(rng() % p.generator_count()), (rng() % 2) ? 1 : -1});
      const int x = p.add_generator("x" + std::to_string(t));
      p.add_relator(concat(Word{{x, 1}}, inverse(w)));
      CHECK(abelianization(p) == expected);
    }
  }
}
