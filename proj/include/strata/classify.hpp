#pragma once

#include <string>

#include "strata/presentation.hpp"

namespace strata {

enum class Flavor { ordered, unordered };

enum class GroupTag {
  trivial,
  integers,
  symmetric,
  pure_braid,
  braid,
  pure_braid_mod_d,
  braid_mod_delta_sq,
  central_ext_top,
};

/// π_1 of the stratum of k points in ℂ^n spanning an i-dimensional affine
/// subspace, ordered (F) or unordered (C).
struct GroupDescriptor {
  GroupTag tag = GroupTag::trivial;
  int k = 1;
  int i = 0;
  int n = 1;
  Flavor flavor = Flavor::ordered;

  /// Number of strands/points the group's generators act on: k, except for
  /// integers/central_ext_top where it is n + 1 (= k on the stratum).
  int strands() const { return k; }

  /// Human-readable group, e.g. "B_4 / ⟨Δ²⟩".
  std::string name() const;
  /// The statement that identifies this case, e.g.
  /// "π_1(C_k^{1,n}) = B_k/⟨Δ_k²⟩ for n > 1".
  std::string statement() const;
  /// Generators and defining relators of the group in the alphabet accepted
  /// by element_from_word.
  Presentation presentation() const;

  friend bool operator==(const GroupDescriptor&, const GroupDescriptor&) = default;
};

std::string to_string(GroupTag tag);
std::string to_string(Flavor flavor);

/// Nonempty strata: k = 1 with i = 0, or k >= 2 with 1 <= i <= min(k-1, n).
bool stratum_nonempty(int k, int i, int n);

/// Throws std::domain_error for an empty stratum and std::invalid_argument
/// for k < 1 or n < 1.
GroupDescriptor classify(int k, int i, int n, Flavor flavor);

/// Descriptor for a named group without going through (k, i, n):
/// "braid", "pure-braid", "braid-mod-delta2", "pure-braid-mod-d",
/// "symmetric", "integers", "trivial" take k; "top" takes n (k = n + 1).
GroupDescriptor named_group(const std::string& name, int size);

}  // namespace strata
