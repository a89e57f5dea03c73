#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "strata/config_loop.hpp"
#include "strata/garside.hpp"
#include "strata/loop_invariants.hpp"
#include "support.hpp"

using namespace strata;

namespace {

Point pt(std::initializer_list<Complex> coords) { return Point(coords); }

// A loop whose determinant path is (z^m, ...) for k = n + 1: the last point
// travels around the hyperplane of the others m times.
ConfigLoop power_h_loop(int n, int m, int frames) {
  std::vector<Frame> out;
  for (int s = 0; s < frames; ++s) {
    const double t = static_cast<double>(s) / (frames - 1);
    Frame f(n + 1, Point(n));
    for (int j = 1; j < n; ++j) f[j][j - 1] = 1.0;
    f[n][n - 1] = std::polar(1.0, 2.0 * std::numbers::pi * m * t);
    out.push_back(f);
  }
  out.back() = out.front();
  return ConfigLoop(n + 1, n, out);
}

}  // namespace

TEST_CASE("span dimension examples") {
  CHECK(span_dimension({pt({0.0, 0.0}), pt({1.0, 0.0}), pt({0.0, 1.0})}) == 2);
  CHECK(span_dimension({pt({0.0, 0.0}), pt({1.0, 0.0}), pt({2.0, 0.0})}) == 1);
  CHECK(span_dimension({pt({0.0, 0.0, 0.0}), pt({1.0, 0.0, 0.0}), pt({0.0, 1.0, 0.0}), pt({0.0, 0.0, 1.0})}) == 3);
  // A complex multiple is the same complex line.
  CHECK(span_dimension({pt({0.0, 0.0}), pt({1.0, 2.0}), pt({Complex(0, 1), Complex(0, 2)})}) == 1);
  CHECK(span_dimension({pt({1.0})}) == 0);
  CHECK(span_dimension({pt({1.0, 2.0}), pt({1.0, 2.0})}) == 0);
  CHECK(span_dimension({pt({0.0, 0.0}), pt({1.0, 0.0}), pt({1.0, 1e-10})}) == 1);
  CHECK(span_dimension({pt({0.0, 0.0}), pt({1.0, 0.0}), pt({1.0, 1e-10})}, 1e-12) == 2);
  CHECK_THROWS_AS(span_dimension({}), std::invalid_argument);
}

TEST_CASE("gamma and h loops") {
  for (int k = 2; k <= 5; ++k) {
    const auto g = make_gamma_loop(k);
    CHECK(g.frame_count() == static_cast<std::size_t>(8 * k * k));
    CHECK(g.closes_ordered());
    for (const auto& r : span_reports(g)) CHECK(r.dimension == 1);
  }
  CHECK_THROWS_AS(make_gamma_loop(3, 71), std::invalid_argument);
  CHECK_THROWS_AS(make_gamma_loop(1), std::invalid_argument);
  for (int n = 1; n <= 4; ++n) {
    const auto h = make_h_loop(n);
    CHECK(h.k() == n + 1);
    for (const auto& r : span_reports(h)) CHECK(r.dimension == n);
  }
  CHECK_THROWS_AS(make_h_loop(2, 63), std::invalid_argument);
  CHECK_THROWS_AS(make_h_loop(0), std::invalid_argument);
}

TEST_CASE("loop validation") {
  const Frame a{pt({0.0}), pt({1.0})};
  const Frame b{pt({0.0}), pt({2.0})};
  CHECK_THROWS_AS(ConfigLoop(2, 1, {a}), LoopError);
  CHECK_THROWS_AS(ConfigLoop(2, 1, {a, b}), LoopError);
  CHECK_THROWS_AS(ConfigLoop(2, 1, {a, {pt({0.0}), pt({0.0})}, a}), LoopError);
  CHECK_THROWS_AS(ConfigLoop(3, 1, {a, a}), LoopError);
  CHECK_THROWS_AS(ConfigLoop(2, 2, {a, a}), LoopError);
  // Closing up to relabelling is allowed.
  const ConfigLoop swapped(2, 1, {a, {pt({1.0}), pt({0.0})}});
  CHECK_FALSE(swapped.closes_ordered());
}

TEST_CASE("extract_braid examples") {
  const Frame base{pt({0.0}), pt({1.0}), pt({2.5})};
  CHECK(extract_braid(ConfigLoop(3, 1, {base, base, base})).empty());
  // Counterclockwise half turn of two points.
  std::vector<Frame> half;
  for (int s = 0; s <= 16; ++s) {
    const Complex z = std::polar(1.0, std::numbers::pi * s / 16.0);
    half.push_back({pt({-z}), pt({z})});
  }
  CHECK(extract_braid(ConfigLoop(2, 1, half)).to_string() == "s1");
  CHECK(extract_braid(reverse(ConfigLoop(2, 1, half))).to_string() == "s1^-1");
  for (int k = 3; k <= 4; ++k) {
    const auto b = extract_braid(make_gamma_loop(k));
    CHECK(equal_in_braid(b, power(delta_word(k), 2)));
    CHECK(equal_in_braid(b, d_word(k)));
    CHECK(equal_in_braid(extract_braid(reverse(make_gamma_loop(k))), power(delta_word(k), -2)));
  }
}

TEST_CASE("prescribed braids are read back letter for letter") {
  std::mt19937_64 rng(1);
  for (int t = 0; t < 200; ++t) {
    const int k = 2 + static_cast<int>(rng() % 4);
    const auto w = support::random_braid(rng, k, static_cast<int>(rng() % 12));
    CHECK(extract_braid(support::loop_for_word(w)) == w);
    CHECK(extract_braid(support::tilted_loop_for_word(w, 0.6, 0.8)) == w);
    // Without the generic offsets the half-turn midpoints are exact ties and
    // the time shifts take over.
    ExtractOptions plain;
    plain.perturbation = 0.0;
    CHECK(extract_braid(support::loop_for_word(w, 8), plain) == w);
  }
}

TEST_CASE("collinearity is enforced") {
  CHECK_THROWS_AS(extract_braid(make_h_loop(2)), LoopError);
}

TEST_CASE("ties that cannot be resolved are reported") {
  ExtractOptions opts;
  opts.perturbation = 0.0;
  const Frame base{pt({0.0}), pt({Complex(0.0, 1.0)})};
  CHECK_THROWS_AS(extract_braid(ConfigLoop(2, 1, {base, base}), opts), LoopError);
  const Frame a{pt({0.0}), pt({1.0})};
  const Frame tie{pt({Complex(0.5, -1.0)}), pt({Complex(0.5, 1.0)})};
  opts.tie_attempts = 0;
  CHECK_THROWS_AS(extract_braid(ConfigLoop(2, 1, {a, tie, a}), opts), LoopError);
}

TEST_CASE("refinement stability") {
  std::mt19937_64 rng(2);
  for (int k = 3; k <= 4; ++k) {
    const auto f = garside_normal_form(extract_braid(make_gamma_loop(k)));
    CHECK(garside_normal_form(extract_braid(make_gamma_loop(k, 16 * k * k))) == f);
    CHECK(garside_normal_form(extract_braid(refine(make_gamma_loop(k)))) == f);
  }
  for (int t = 0; t < 50; ++t) {
    const int k = 2 + static_cast<int>(rng() % 4);
    const auto loop = support::loop_for_word(support::random_braid(rng, k, 8), 6);
    CHECK(garside_normal_form(extract_braid(refine(loop))) == garside_normal_form(extract_braid(loop)));
  }
  for (int n = 1; n <= 3; ++n) {
    CHECK(det_winding(refine(make_h_loop(n))) == det_winding(make_h_loop(n)));
    CHECK(det_winding(make_h_loop(n, 128)) == 1);
  }
}

TEST_CASE("concatenation is a homomorphism") {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 100; ++t) {
    const int k = 2 + static_cast<int>(rng() % 4);
    const auto u = support::random_braid(rng, k, static_cast<int>(rng() % 8));
    const auto v = support::random_braid(rng, k, static_cast<int>(rng() % 8));
    // Positions are reused, so the second loop starts where the first ends
    // only after relabelling; build it on the first loop's final frame.
    const auto first = support::loop_for_word(u);
    auto second_frames = support::frames_for_word(v, 12);
    const auto& end = first.frames().back();
    // Relabel v's frames so that slot occupancy matches `end`.
    std::vector<int> label_at_slot(k);
    for (int a = 0; a < k; ++a) label_at_slot[static_cast<int>(std::lround(end[a][0].real())) - 1] = a;
    for (auto& f : second_frames) {
      Frame g(k);
      for (int s = 0; s < k; ++s) g[label_at_slot[s]] = f[s];
      f = g;
    }
    const ConfigLoop second(k, 1, second_frames);
    const auto joined = concatenate(first, second);
    CHECK(equal_in_braid(extract_braid(joined), multiply(extract_braid(first), extract_braid(second))));
  }
  const auto h = make_h_loop(2);
  CHECK(det_winding(concatenate(h, h)) == 2);
  CHECK(det_winding(concatenate(h, reverse(h))) == 0);
  CHECK(det_winding(concatenate(concatenate(h, h), h)) == 3);
  CHECK_THROWS_AS(concatenate(make_h_loop(2), make_h_loop(3)), LoopError);
}

TEST_CASE("base point change conjugates") {
  // Loop w, conjugated by a path c: c · w · c^{-1} as one loop.
  std::mt19937_64 rng(4);
  for (int t = 0; t < 50; ++t) {
    const int k = 3 + static_cast<int>(rng() % 2);
    const auto c = support::random_braid(rng, k, 3);
    const auto w = support::random_braid(rng, k, 5);
    const auto whole = multiply(multiply(c, w), inverse(c));
    const auto b = extract_braid(support::loop_for_word(whole));
    CHECK(permutation_image(b) == permutation_image(whole));
    CHECK(exponent_sum(b) == exponent_sum(w));
    CHECK(equal_in_braid(b, whole));
  }
}

TEST_CASE("det_winding examples") {
  for (int n = 1; n <= 3; ++n) {
    CHECK(det_winding(make_h_loop(n)) == 1);
    CHECK(det_winding(reverse(make_h_loop(n))) == -1);
  }
  const Frame fixed{pt({0.0, 0.0}), pt({1.0, 0.0}), pt({0.0, 1.0})};
  CHECK(det_winding(ConfigLoop(3, 2, {fixed, fixed, fixed})) == 0);
  // Coarse frames force refinement: three samples per turn.
  CHECK(det_winding(power_h_loop(2, 1, 4)) == 1);
  CHECK(det_winding(power_h_loop(2, 3, 200)) == 3);
  CHECK(det_winding(power_h_loop(1, -2, 100)) == -2);
  WindingOptions tight;
  tight.refinement_budget = 0;
  CHECK_THROWS_AS(det_winding(power_h_loop(2, 1, 4), tight), LoopError);
  CHECK_THROWS_AS(det_winding(make_gamma_loop(3)), LoopError);
  const Frame flat{pt({0.0, 0.0}), pt({1.0, 0.0}), pt({2.0, 0.0})};
  CHECK_THROWS_AS(det_winding(ConfigLoop(3, 2, {flat, flat})), LoopError);
}

TEST_CASE("loop JSON") {
  const auto h = make_h_loop(2);
  const auto back = loop_from_json(to_json(h));
  CHECK(back.k() == 3);
  CHECK(back.n() == 2);
  CHECK(back.frames() == h.frames());
  CHECK(to_json(back) == to_json(h));
  CHECK_THROWS_AS(loop_from_json("{"), LoopError);
  CHECK_THROWS_AS(loop_from_json(R"({"k": 2, "n": 1, "frames": [], "closed": true})"), LoopError);
  CHECK_THROWS_AS(loop_from_json(R"({"k": 2, "n": 1, "frames": [[[[0,0]],[[1,0]]],[[[0,0]],[[1,0]]]], "closed": false})"),
                  LoopError);
  CHECK_THROWS_AS(loop_from_json(R"({"k": 2, "n": 1, "frames": [[[[0,0,0]],[[1,0]]],[[[0,0]],[[1,0]]]]})"), LoopError);
  const auto ok = loop_from_json(R"({"k": 2, "n": 1, "frames": [[[[0,0]],[[1,0]]],[[[0,0]],[[1,0]]]]})");
  CHECK(ok.frame_count() == 2);
}

TEST_CASE("named loops") {
  CHECK(generate_named_loop("gamma:k=4").frame_count() == 128);
  CHECK(generate_named_loop("gamma:k=3,frames=200").frame_count() == 200);
  CHECK(generate_named_loop("h:n=3").k() == 4);
  CHECK_THROWS_AS(generate_named_loop("gamma"), std::invalid_argument);
  CHECK_THROWS_AS(generate_named_loop("gamma:n=3"), std::invalid_argument);
  CHECK_THROWS_AS(generate_named_loop("gamma:k=x"), std::invalid_argument);
  CHECK_THROWS_AS(generate_named_loop("circle:k=3"), std::invalid_argument);
  CHECK_THROWS_AS(generate_named_loop("gamma:k=3,frames=10"), std::invalid_argument);
}
