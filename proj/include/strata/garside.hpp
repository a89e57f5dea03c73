#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "strata/braid_word.hpp"
#include "strata/permutation.hpp"

namespace strata {

/// Left-greedy normal form Δ^delta_power · f_1 ⋯ f_r.
///
/// Every factor is a positive permutation braid (a "simple" element) given
/// by its permutation, never the identity and never the half twist, and each
/// adjacent pair (f_t, f_{t+1}) is left-weighted. Two words are equal in B_k
/// exactly when their forms compare equal.
struct GarsideForm {
  int strands = 1;
  long delta_power = 0;
  std::vector<Permutation> factors;

  bool is_identity() const { return delta_power == 0 && factors.empty(); }
  /// Δ^(2m) for some m, i.e. a member of the centre generated by Δ².
  bool is_delta_square_power() const { return factors.empty() && delta_power % 2 == 0; }

  /// Spells Δ^m with delta_word and each factor with a reduced positive word.
  BraidWord to_word() const;

  /// "Δ^m | f1 ; f2 ; ..." with factors in one-line notation.
  std::string to_string() const;
  static GarsideForm parse(int strands, std::string_view text);

  friend bool operator==(const GarsideForm&, const GarsideForm&) = default;
};

GarsideForm garside_normal_form(const BraidWord& u);

/// Throws std::invalid_argument on strand mismatch.
bool equal_in_braid(const BraidWord& u, const BraidWord& v);

/// Image of the form under the coset map B_k -> B_k/<Δ²>: delta_power is
/// reduced into {0, 1}. Δ² is central, so the factors are unchanged.
GarsideForm reduce_mod_delta_square(GarsideForm form);

namespace garside {

/// Reduced positive word for the permutation braid of `simple`.
BraidWord spell_simple(const Permutation& simple);

/// Right descents: generators σ_i with simple = X·σ_i (1-based indices).
std::vector<int> finishing_set(const Permutation& simple);
/// Left descents: generators σ_i with simple = σ_i·X (1-based indices).
std::vector<int> starting_set(const Permutation& simple);

}  // namespace garside

}  // namespace strata
