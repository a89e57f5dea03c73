#pragma once

#include <string>
#include <string_view>
#include <variant>

#include "strata/braid_word.hpp"
#include "strata/classify.hpp"
#include "strata/garside.hpp"
#include "strata/permutation.hpp"
#include "strata/presentation.hpp"

namespace strata {

/// Element T^twist · s(perm) of the central extension
/// 1 -> ℤ -> B_{n+1}/⟨σ_1² = ... = σ_n²⟩ -> Σ_{n+1} -> 1,
/// where s(perm) is the positive reduced lift of perm and T = σ_i².
/// perm acts on the points {0, 1, ..., n}; point p is label p + 1 of the
/// Permutation.
struct CentralExtElement {
  int points = 1;
  long twist = 0;
  Permutation perm;

  std::string to_string() const;
  friend bool operator==(const CentralExtElement&, const CentralExtElement&) = default;
};

using ElementPayload = std::variant<std::monostate,  // trivial
                                    long,            // integers
                                    Permutation,     // symmetric
                                    GarsideForm,     // braid tags; mod-Δ² tags keep delta_power in {0, 1}
                                    CentralExtElement>;

struct GroupElement {
  GroupDescriptor descriptor;
  ElementPayload payload;

  std::string to_string() const;
  friend bool operator==(const GroupElement&, const GroupElement&) = default;
};

/// Parses a word in the descriptor's alphabet (see GroupDescriptor::
/// presentation()), plus the shorthands "delta" (σ-alphabets), "D" (the full
/// twist in α-alphabets) and "T" (central_ext_top). Throws
/// std::invalid_argument on malformed text or a foreign generator.
Word parse_group_word(const GroupDescriptor& d, std::string_view text);

/// Braid word of a word in a σ- or α-alphabet (α_ij via pure_generator).
BraidWord to_braid_word(const GroupDescriptor& d, const Word& w);

GroupElement element_from_word(const GroupDescriptor& d, const Word& w);
GroupElement element_from_word(const GroupDescriptor& d, std::string_view text);

bool equal_in_group(const GroupDescriptor& d, const Word& u, const Word& v);
bool equal_in_group(const GroupDescriptor& d, std::string_view u, std::string_view v);

/// The projection to Σ_k for unordered groups. For central_ext_top the
/// generator σ_i maps to the transposition exchanging points 0 and i.
/// Throws std::invalid_argument for ordered descriptors.
Permutation tau(const GroupDescriptor& d, const Word& w);

/// σ'_i = σ_1 ⋯ σ_{i-1} σ_i σ_{i-1}^{-1} ⋯ σ_1^{-1} in the generators of
/// central_ext_top(n+1); requires 1 <= i <= n.
Word sigma_prime(int i, int n);

/// ⟨σ_1, ..., σ_n⟩ presentation of B_{n+1}/⟨σ_1² = ... = σ_n²⟩ in the
/// generators σ_i with τ(σ_i) = (0 i): the relators of unordered_top(n+1)
/// with each Artin generator replaced by σ'_i.
Presentation star_top_presentation(int n);

/// Rewrites a word in the σ_i (τ(σ_i) = (0 i)) into the Artin generators of
/// unordered_top(n+1), using σ_i = c_i^{-1} σ'_i c_i with c_i = σ_1 ⋯ σ_{i-1}.
Word star_to_artin(const Word& w, int n);

}  // namespace strata
