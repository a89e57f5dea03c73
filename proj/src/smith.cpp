#include "strata/smith.hpp"

#include <sstream>
#include <stdexcept>

namespace strata {

IntegerMatrix::IntegerMatrix(std::size_t rows, std::size_t cols, std::vector<BigInt> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows * cols) throw std::invalid_argument("matrix entries do not match dimensions");
}

IntegerMatrix IntegerMatrix::from_rows(const std::vector<std::vector<long>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  IntegerMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw std::invalid_argument("ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = rows[r][c];
  }
  return m;
}

namespace {

void swap_rows(IntegerMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m.at(a, c), m.at(b, c));
}

void swap_cols(IntegerMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t r = 0; r < m.rows(); ++r) std::swap(m.at(r, a), m.at(r, b));
}

// Moves the entry of least nonzero absolute value in the trailing block
// starting at (t, t) to (t, t). Returns false if the block is zero.
bool bring_min_pivot(IntegerMatrix& m, std::size_t t) {
  bool found = false;
  std::size_t best_r = t;
  std::size_t best_c = t;
  BigInt best;
  for (std::size_t r = t; r < m.rows(); ++r) {
    for (std::size_t c = t; c < m.cols(); ++c) {
      if (m.at(r, c) == 0) continue;
      BigInt v = abs(m.at(r, c));
      if (!found || v < best) {
        found = true;
        best = v;
        best_r = r;
        best_c = c;
      }
    }
  }
  if (!found) return false;
  swap_rows(m, t, best_r);
  swap_cols(m, t, best_c);
  return true;
}

}  // namespace

std::vector<BigInt> smith_normal_form(IntegerMatrix m) {
  std::vector<BigInt> diagonal;
  const std::size_t limit = std::min(m.rows(), m.cols());
  for (std::size_t t = 0; t < limit; ++t) {
    if (!bring_min_pivot(m, t)) break;
    for (;;) {
      bool dirty = false;
      const BigInt pivot = m.at(t, t);
      for (std::size_t r = t + 1; r < m.rows(); ++r) {
        if (m.at(r, t) == 0) continue;
        const BigInt q = m.at(r, t) / pivot;
        for (std::size_t c = t; c < m.cols(); ++c) m.at(r, c) -= q * m.at(t, c);
        if (m.at(r, t) != 0) dirty = true;
      }
      for (std::size_t c = t + 1; c < m.cols(); ++c) {
        if (m.at(t, c) == 0) continue;
        const BigInt q = m.at(t, c) / pivot;
        for (std::size_t r = t; r < m.rows(); ++r) m.at(r, c) -= q * m.at(r, t);
        if (m.at(t, c) != 0) dirty = true;
      }
      if (dirty) {
        bring_min_pivot(m, t);
        continue;
      }
      // Row and column are clear; enforce divisibility of the rest.
      std::size_t bad_row = m.rows();
      for (std::size_t r = t + 1; r < m.rows() && bad_row == m.rows(); ++r) {
        for (std::size_t c = t + 1; c < m.cols(); ++c) {
          if (m.at(r, c) % pivot != 0) {
            bad_row = r;
            break;
          }
        }
      }
      if (bad_row == m.rows()) break;
      for (std::size_t c = t; c < m.cols(); ++c) m.at(t, c) += m.at(bad_row, c);
    }
    diagonal.push_back(abs(m.at(t, t)));
  }
  return diagonal;
}

std::string AbelianInvariants::to_string() const {
  if (is_trivial()) return "1";
  std::ostringstream out;
  bool first = true;
  if (rank > 0) {
    out << "Z";
    if (rank > 1) out << '^' << rank;
    first = false;
  }
  for (const auto& t : torsion) {
    out << (first ? "" : " x ") << "Z/" << t;
    first = false;
  }
  return out.str();
}

IntegerMatrix relation_matrix(const Presentation& p) {
  IntegerMatrix m(p.relators().size(), static_cast<std::size_t>(p.generator_count()));
  for (std::size_t r = 0; r < p.relators().size(); ++r) {
    for (const auto& letter : p.relators()[r]) m.at(r, static_cast<std::size_t>(letter.generator)) += letter.sign;
  }
  return m;
}

AbelianInvariants abelianization(const Presentation& p) {
  const auto diagonal = smith_normal_form(relation_matrix(p));
  AbelianInvariants out;
  out.rank = p.generator_count() - static_cast<int>(diagonal.size());
  for (const auto& d : diagonal) {
    if (d > 1) out.torsion.push_back(d);
  }
  return out;
}

}  // namespace strata
