#include "strata/kernels.hpp"

#include <Eigen/Dense>
#include <omp.h>

namespace strata::kernels {

namespace {

Complex frame_determinant(const Frame& frame, int n) {
  if (static_cast<int>(frame.size()) != n + 1) throw LoopError("determinant needs k = n + 1 points");
  Eigen::MatrixXcd m(n, n);
  for (int c = 0; c < n; ++c) {
    for (int r = 0; r < n; ++r) m(r, c) = frame[c + 1][r] - frame[0][r];
  }
  return m.determinant();
}

std::vector<double> singular_values(const Frame& frame) {
  if (frame.size() < 2) return {};
  const auto rows = static_cast<Eigen::Index>(frame.size() - 1);
  const auto cols = static_cast<Eigen::Index>(frame[0].size());
  Eigen::MatrixXcd m(rows, cols);
  for (Eigen::Index r = 0; r < rows; ++r) {
    for (Eigen::Index c = 0; c < cols; ++c) m(r, c) = frame[r + 1][c] - frame[0][c];
  }
  const Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
  const auto& s = svd.singularValues();
  return std::vector<double>(s.data(), s.data() + s.size());
}

}  // namespace

std::vector<GarsideForm> normal_forms_serial(const std::vector<BraidWord>& words) {
  std::vector<GarsideForm> out;
  out.reserve(words.size());
  for (const auto& w : words) out.push_back(garside_normal_form(w));
  return out;
}

std::vector<GarsideForm> normal_forms_parallel(const std::vector<BraidWord>& words) {
  std::vector<GarsideForm> out(words.size());
  const auto count = static_cast<long>(words.size());
  // Word lengths vary a lot, hence dynamic scheduling.
#pragma omp parallel for schedule(dynamic, 16)
  for (long w = 0; w < count; ++w) out[w] = garside_normal_form(words[w]);
  return out;
}

std::vector<Complex> frame_determinants_serial(const std::vector<Frame>& frames, int n) {
  std::vector<Complex> out;
  out.reserve(frames.size());
  for (const auto& f : frames) out.push_back(frame_determinant(f, n));
  return out;
}

std::vector<Complex> frame_determinants_parallel(const std::vector<Frame>& frames, int n) {
  for (const auto& f : frames) {
    if (static_cast<int>(f.size()) != n + 1) throw LoopError("determinant needs k = n + 1 points");
  }
  std::vector<Complex> out(frames.size());
  const auto count = static_cast<long>(frames.size());
#pragma omp parallel for schedule(static)
  for (long s = 0; s < count; ++s) out[s] = frame_determinant(frames[s], n);
  return out;
}

std::vector<std::vector<double>> frame_singular_values_serial(const std::vector<Frame>& frames) {
  std::vector<std::vector<double>> out;
  out.reserve(frames.size());
  for (const auto& f : frames) out.push_back(singular_values(f));
  return out;
}

std::vector<std::vector<double>> frame_singular_values_parallel(const std::vector<Frame>& frames) {
  std::vector<std::vector<double>> out(frames.size());
  const auto count = static_cast<long>(frames.size());
#pragma omp parallel for schedule(static)
  for (long s = 0; s < count; ++s) out[s] = singular_values(frames[s]);
  return out;
}

int max_threads() { return omp_get_max_threads(); }

}  // namespace strata::kernels
