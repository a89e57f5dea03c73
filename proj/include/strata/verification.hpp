#pragma once

#include <string>
#include <vector>

namespace strata {

struct ClaimResult {
  std::string claim_id;
  /// The mathematical statement being checked.
  std::string paper_anchor;
  bool passed = false;
  std::string witness;

  std::string status() const { return passed ? "pass" : "fail"; }
};

struct VerificationReport {
  std::vector<ClaimResult> claims;

  bool all_passed() const;
  /// [{"claim_id", "paper_anchor", "status", "witness"}, ...] in claim order.
  std::string to_json() const;
  std::string to_text() const;
};

/// Runs every group-level claim of the classification at desk scale:
/// braid identities up to max_k strands, the central-extension model up to
/// n = min(max_k - 1, 4), coset orders for n <= 3, abelianizations, the
/// classification sweep and the two geometric loops. Requires max_k >= 3.
/// A claim that throws is reported as failed with the message as witness.
VerificationReport paper_verification_suite(int max_k = 5);

}  // namespace strata
