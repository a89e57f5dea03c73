#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace strata {

/// A permutation of {1, ..., size} in one-line notation.
///
/// Convention used throughout the library: images()[p-1] is the label of the
/// strand sitting at position p after a sequence of adjacent swaps has been
/// applied, left to right, to the arrangement (1, 2, ..., size). With this
/// reading, `a.then(b)` is "perform the swaps of a, then the swaps of b",
/// and the transposition products σ1σ2 in Σ_3 give (2, 3, 1).
class Permutation {
 public:
  Permutation() = default;

  /// Throws std::invalid_argument unless `images` is a bijection of 1..size.
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int size);
  /// Exchanges the values a and b (1-based).
  static Permutation transposition(int size, int a, int b);
  /// The order-reversing permutation (size, size-1, ..., 1).
  static Permutation reversal(int size);

  int size() const { return static_cast<int>(images_.size()); }
  /// 1-based lookup.
  int image(int position) const { return images_[position - 1]; }
  const std::vector<int>& images() const { return images_; }

  Permutation then(const Permutation& next) const;
  Permutation inverse() const;

  /// Number of inversions, i.e. the Coxeter length w.r.t. adjacent swaps.
  int inversions() const;
  bool is_identity() const;

  /// "2 3 1"
  std::string to_string() const;
  static Permutation parse(std::string_view text);

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

}  // namespace strata
