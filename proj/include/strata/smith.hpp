#pragma once

#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "strata/presentation.hpp"

namespace strata {

using BigInt = boost::multiprecision::cpp_int;

class IntegerMatrix {
 public:
  IntegerMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}
  IntegerMatrix(std::size_t rows, std::size_t cols, std::vector<BigInt> entries);
  static IntegerMatrix from_rows(const std::vector<std::vector<long>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  BigInt& at(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const BigInt& at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<BigInt> entries_;
};

/// Nonzero invariant factors d_1 | d_2 | ... | d_r (all positive), where r is
/// the rank. Pivots are chosen by minimal nonzero absolute value.
std::vector<BigInt> smith_normal_form(IntegerMatrix m);

/// ℤ^rank ⊕ ℤ/t_1 ⊕ ... with every t_i >= 2 and t_i | t_{i+1}.
struct AbelianInvariants {
  int rank = 0;
  std::vector<BigInt> torsion;

  bool is_trivial() const { return rank == 0 && torsion.empty(); }
  /// "Z^2 x Z/6"; the trivial group prints as "1".
  std::string to_string() const;

  friend bool operator==(const AbelianInvariants&, const AbelianInvariants&) = default;
};

/// Relator exponent matrix: one row per relator, one column per generator.
IntegerMatrix relation_matrix(const Presentation& p);
AbelianInvariants abelianization(const Presentation& p);

}  // namespace strata
