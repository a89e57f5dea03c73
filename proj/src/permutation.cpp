#include "strata/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace strata {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (int v : images_) {
    if (v < 1 || v > size() || seen[v - 1]) {
      throw std::invalid_argument("permutation images must be a bijection of 1..size");
    }
    seen[v - 1] = true;
  }
}

Permutation Permutation::identity(int size) {
  if (size < 0) throw std::invalid_argument("negative permutation size");
  std::vector<int> images(size);
  std::iota(images.begin(), images.end(), 1);
  Permutation p;
  p.images_ = std::move(images);
  return p;
}

Permutation Permutation::transposition(int size, int a, int b) {
  if (a < 1 || b < 1 || a > size || b > size) {
    throw std::invalid_argument("transposition point out of range");
  }
  Permutation p = identity(size);
  std::swap(p.images_[a - 1], p.images_[b - 1]);
  return p;
}

Permutation Permutation::reversal(int size) {
  Permutation p = identity(size);
  std::reverse(p.images_.begin(), p.images_.end());
  return p;
}

Permutation Permutation::then(const Permutation& next) const {
  if (next.size() != size()) throw std::invalid_argument("permutation size mismatch");
  Permutation out;
  out.images_.resize(images_.size());
  for (std::size_t p = 0; p < images_.size(); ++p) {
    out.images_[p] = images_[next.images_[p] - 1];
  }
  return out;
}

Permutation Permutation::inverse() const {
  Permutation out;
  out.images_.resize(images_.size());
  for (std::size_t p = 0; p < images_.size(); ++p) {
    out.images_[images_[p] - 1] = static_cast<int>(p) + 1;
  }
  return out;
}

int Permutation::inversions() const {
  int count = 0;
  for (std::size_t a = 0; a < images_.size(); ++a) {
    for (std::size_t b = a + 1; b < images_.size(); ++b) {
      if (images_[a] > images_[b]) ++count;
    }
  }
  return count;
}

bool Permutation::is_identity() const {
  for (std::size_t p = 0; p < images_.size(); ++p) {
    if (images_[p] != static_cast<int>(p) + 1) return false;
  }
  return true;
}

std::string Permutation::to_string() const {
  std::ostringstream out;
  for (std::size_t p = 0; p < images_.size(); ++p) {
    if (p) out << ' ';
    out << images_[p];
  }
  return out.str();
}

Permutation Permutation::parse(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::vector<int> images;
  int v = 0;
  while (in >> v) images.push_back(v);
  if (!in.eof()) throw std::invalid_argument("malformed permutation: " + std::string(text));
  return Permutation(std::move(images));
}

}  // namespace strata
