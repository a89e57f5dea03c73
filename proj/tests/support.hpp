#pragma once

// Test-only helpers: seeded random words, relator insertion, and oracles that
// share no code with the library routines they check.

#include <cmath>
#include <map>
#include <numbers>
#include <random>
#include <set>
#include <vector>

#include "strata/braid_word.hpp"
#include "strata/config_loop.hpp"
#include "strata/presentation.hpp"

namespace support {

using strata::BraidWord;
using strata::Letter;
using strata::Word;

inline BraidWord random_braid(std::mt19937_64& rng, int k, int length) {
  std::uniform_int_distribution<int> index(1, k - 1);
  std::uniform_int_distribution<int> coin(0, 1);
  std::vector<Letter> letters;
  for (int t = 0; t < length; ++t) letters.push_back({index(rng), coin(rng) ? 1 : -1});
  return BraidWord(k, letters);
}

inline Word random_word(std::mt19937_64& rng, int generators, int length) {
  std::uniform_int_distribution<int> gen(0, generators - 1);
  std::uniform_int_distribution<int> coin(0, 1);
  Word w;
  for (int t = 0; t < length; ++t) w.push_back({gen(rng), coin(rng) ? 1 : -1});
  return w;
}

/// The defining relators of B_k written as braid words: braid relations,
/// far commutations and free cancellations, each possibly inverted.
inline std::vector<BraidWord> braid_relators(int k) {
  std::vector<BraidWord> out;
  for (int i = 1; i < k; ++i) {
    out.push_back(BraidWord(k, {{i, 1}, {i, -1}}));
    out.push_back(BraidWord(k, {{i, -1}, {i, 1}}));
    for (int j = i + 2; j < k; ++j) out.push_back(BraidWord(k, {{i, 1}, {j, 1}, {i, -1}, {j, -1}}));
    if (i + 1 < k) {
      out.push_back(BraidWord(k, {{i, 1}, {i + 1, 1}, {i, 1}, {i + 1, -1}, {i, -1}, {i + 1, -1}}));
    }
  }
  return out;
}

/// Inserts `count` random relators (or their inverses) at random positions.
template <typename Seq>
Seq insert_relators(std::mt19937_64& rng, Seq w, const std::vector<Seq>& relators, int count) {
  for (int t = 0; t < count; ++t) {
    const auto& r = relators[std::uniform_int_distribution<std::size_t>(0, relators.size() - 1)(rng)];
    const bool flip = std::uniform_int_distribution<int>(0, 1)(rng) == 1;
    auto piece = flip ? strata::inverse(r) : r;
    if constexpr (std::is_same_v<Seq, BraidWord>) {
      std::vector<Letter> letters = w.letters();
      const auto at = std::uniform_int_distribution<std::size_t>(0, letters.size())(rng);
      letters.insert(letters.begin() + static_cast<long>(at), piece.letters().begin(), piece.letters().end());
      w = BraidWord(w.strands(), letters);
    } else {
      const auto at = std::uniform_int_distribution<std::size_t>(0, w.size())(rng);
      w.insert(w.begin() + static_cast<long>(at), piece.begin(), piece.end());
    }
  }
  return w;
}

// ---------------------------------------------------------------------------
// Artin's faithful action of B_k on the free group F_k. Free-group words are
// vectors of nonzero ints, ±j standing for x_j^{±1}.

using FreeWord = std::vector<int>;

inline void free_push(FreeWord& w, int x) {
  if (!w.empty() && w.back() == -x) {
    w.pop_back();
  } else {
    w.push_back(x);
  }
}

class ArtinAction {
 public:
  explicit ArtinAction(int k) : images_(k + 1) {
    for (int j = 1; j <= k; ++j) images_[j] = {j};
  }

  // Precomposes with σ_i^{sign}: x ↦ current(s(x)).
  void apply(int i, int sign) {
    const FreeWord xi = images_[i];
    const FreeWord xj = images_[i + 1];
    if (sign > 0) {
      images_[i] = concat({xi, xj, invert(xi)});
      images_[i + 1] = xi;
    } else {
      images_[i] = xj;
      images_[i + 1] = concat({invert(xj), xi, xj});
    }
  }

  bool operator==(const ArtinAction& other) const { return images_ == other.images_; }

 private:
  static FreeWord invert(const FreeWord& w) {
    FreeWord out;
    for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(-*it);
    return out;
  }
  static FreeWord concat(std::initializer_list<FreeWord> parts) {
    FreeWord out;
    for (const auto& p : parts) {
      for (int x : p) free_push(out, x);
    }
    return out;
  }

  std::vector<FreeWord> images_;
};

inline ArtinAction artin_action(const BraidWord& b) {
  ArtinAction a(b.strands());
  for (const auto& l : b.letters()) a.apply(l.index, l.sign);
  return a;
}

/// Positive words of B_3 up to the relation s1 s2 s1 = s2 s1 s2: the class of
/// `w` as the closure under that rewrite in both directions.
inline std::set<std::vector<int>> positive_class_b3(const std::vector<int>& w) {
  std::set<std::vector<int>> seen{w};
  std::vector<std::vector<int>> todo{w};
  while (!todo.empty()) {
    const auto cur = todo.back();
    todo.pop_back();
    for (std::size_t p = 0; p + 3 <= cur.size(); ++p) {
      if (cur[p] == cur[p + 2] && cur[p] != cur[p + 1]) {
        auto next = cur;
        std::swap(next[p], next[p + 1]);
        next[p + 2] = next[p];
        if (seen.insert(next).second) todo.push_back(next);
      }
    }
  }
  return seen;
}

// ---------------------------------------------------------------------------
// Planar loops with a prescribed braid: points sit at 1..k on the real axis
// and each letter σ_p^{±1} rotates the points in slots p and p+1 by a half
// turn about their midpoint, counterclockwise for a positive letter.

inline std::vector<strata::Frame> frames_for_word(const BraidWord& b, int steps, strata::Complex a = 1.0,
                                                  strata::Complex c = 0.0) {
  const int k = b.strands();
  std::vector<strata::Complex> pos(k);
  for (int j = 0; j < k; ++j) pos[j] = static_cast<double>(j + 1);
  std::vector<int> at(k);  // label in slot s
  for (int j = 0; j < k; ++j) at[j] = j;
  const auto emit = [&](std::vector<strata::Frame>& out) {
    strata::Frame f;
    for (int j = 0; j < k; ++j) {
      if (c == strata::Complex(0.0)) {
        f.push_back({pos[j]});
      } else {
        f.push_back({a * pos[j], c * pos[j]});
      }
    }
    out.push_back(std::move(f));
  };
  std::vector<strata::Frame> out;
  emit(out);
  for (const auto& l : b.letters()) {
    const int left = at[l.index - 1];
    const int right = at[l.index];
    const double centre = l.index + 0.5;
    for (int s = 1; s <= steps; ++s) {
      const double angle = std::numbers::pi * s / steps * (l.sign > 0 ? 1.0 : -1.0);
      pos[left] = centre + std::polar(0.5, std::numbers::pi + angle);
      pos[right] = centre + std::polar(0.5, angle);
      if (s == steps) {
        pos[left] = static_cast<double>(l.index + 1);
        pos[right] = static_cast<double>(l.index);
      }
      emit(out);
    }
    std::swap(at[l.index - 1], at[l.index]);
  }
  if (b.empty()) emit(out);
  return out;
}

inline strata::ConfigLoop loop_for_word(const BraidWord& b, int steps = 12) {
  return strata::ConfigLoop(b.strands(), 1, frames_for_word(b, steps));
}

/// The same loop on the complex line ℂ·(a, c) of ℂ² with a, c real.
inline strata::ConfigLoop tilted_loop_for_word(const BraidWord& b, double a, double c, int steps = 12) {
  const double norm = std::hypot(a, c);
  return strata::ConfigLoop(b.strands(), 2, frames_for_word(b, steps, a / norm, c / norm));
}

}  // namespace support
