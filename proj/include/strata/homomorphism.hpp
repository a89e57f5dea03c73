#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "strata/presentation.hpp"

namespace strata {

struct RelatorCheck {
  std::string relator;
  bool holds = false;
};

struct HomomorphismReport {
  std::vector<RelatorCheck> checks;

  bool passed() const {
    for (const auto& check : checks) {
      if (!check.holds) return false;
    }
    return true;
  }
};

/// Checks that generator images satisfy every relator of `source`.
///
/// `multiply`, `invert` and `is_identity` describe the target group on the
/// element type; `is_identity` is the target's equality oracle. Throws
/// std::invalid_argument when a source generator has no image.
template <typename Element, typename Multiply, typename Invert, typename IsIdentity>
HomomorphismReport verify_homomorphism(const Presentation& source,
                                       const std::map<std::string, Element>& images,
                                       const Element& identity, Multiply multiply, Invert invert,
                                       IsIdentity is_identity) {
  std::vector<Element> image_of;
  std::vector<Element> inverse_of;
  for (const auto& name : source.generators()) {
    const auto it = images.find(name);
    if (it == images.end()) throw std::invalid_argument("no image for generator '" + name + "'");
    image_of.push_back(it->second);
    inverse_of.push_back(invert(it->second));
  }
  HomomorphismReport report;
  for (const auto& relator : source.relators()) {
    Element value = identity;
    for (const auto& letter : relator) {
      value = multiply(value, letter.sign > 0 ? image_of[letter.generator] : inverse_of[letter.generator]);
    }
    report.checks.push_back({source.format_word(relator), is_identity(value)});
  }
  return report;
}

}  // namespace strata
