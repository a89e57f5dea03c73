#pragma once

#include <cstddef>
#include <vector>

#include "strata/presentation.hpp"

namespace strata {

enum class EnumerationStatus { complete, capped };

inline constexpr std::size_t kDefaultMaxCosets = 100000;

/// Result of a coset enumeration. Coset 0 is the subgroup itself. When the
/// status is complete, the table is closed under every generator and every
/// relator traces a loop from every coset, so coset_count() is the index.
class CosetTable {
 public:
  EnumerationStatus status() const { return status_; }
  bool complete() const { return status_ == EnumerationStatus::complete; }
  std::size_t coset_count() const { return rows_; }
  const Presentation& presentation() const { return presentation_; }
  const std::vector<Word>& subgroup() const { return subgroup_; }

  /// Image of `coset` under one letter, or -1 if undefined.
  int act(int coset, GenLetter letter) const;
  /// Image of `coset` under a word, or -1 if some step is undefined.
  int trace(int coset, const Word& w) const;

  /// Direct check: every entry defined, inverse columns agree, and every
  /// relator (and every subgroup generator from coset 0) closes up.
  bool is_closed_and_consistent() const;

 private:
  friend CosetTable todd_coxeter(const Presentation&, const std::vector<Word>&, std::size_t);

  Presentation presentation_;
  std::vector<Word> subgroup_;
  EnumerationStatus status_ = EnumerationStatus::capped;
  std::size_t rows_ = 0;
  int columns_ = 0;
  std::vector<int> table_;
};

/// HLT coset enumeration with a lookahead pass whenever the live-coset cap
/// is reached. Hitting the cap is a normal outcome (status capped).
CosetTable todd_coxeter(const Presentation& p, const std::vector<Word>& subgroup,
                        std::size_t max_cosets = kDefaultMaxCosets);

}  // namespace strata
