#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "strata/permutation.hpp"

namespace strata {

/// σ_index^sign, 1 <= index <= strands-1.
struct Letter {
  int index = 1;
  int sign = 1;

  friend bool operator==(const Letter&, const Letter&) = default;
};

/// A word in the Artin generators of B_k. The empty word is the identity.
/// No reduction is ever performed implicitly.
class BraidWord {
 public:
  explicit BraidWord(int strands, std::vector<Letter> letters = {});

  /// Parses the text syntax "s1 s2^-1 s3", with extra tokens "s2^3",
  /// "a[i,j]" / "a[i,j]^-1" (pure generators), "delta" / "delta^m" and "e"
  /// (identity).
  static BraidWord parse(int strands, std::string_view text);

  int strands() const { return strands_; }
  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  void push_back(Letter letter);
  void append(const BraidWord& other);

  /// "s1 s2^-1"; the identity prints as "e".
  std::string to_string() const;

  friend bool operator==(const BraidWord&, const BraidWord&) = default;

 private:
  int strands_;
  std::vector<Letter> letters_;
};

/// 1 <= i < j <= strands.
struct PureGeneratorId {
  int i;
  int j;
  int strands;

  PureGeneratorId(int i, int j, int strands);
};

/// Concatenation. Throws std::invalid_argument on strand-count mismatch.
BraidWord multiply(const BraidWord& u, const BraidWord& v);
BraidWord inverse(const BraidWord& u);
BraidWord power(const BraidWord& u, long exponent);

int exponent_sum(const BraidWord& u);
Permutation permutation_image(const BraidWord& u);

/// σ_{j-1} ... σ_{i+1} σ_i² σ_{i+1}^-1 ... σ_{j-1}^-1
BraidWord pure_generator(const PureGeneratorId& id);

/// The staircase word (σ1)(σ2σ1)...(σ_{k-1}...σ1) of the half twist.
BraidWord delta_word(int k);

/// α_12 (α_13 α_23) ... (α_1k ... α_{k-1,k}) spelled in Artin generators.
BraidWord d_word(int k);

}  // namespace strata
