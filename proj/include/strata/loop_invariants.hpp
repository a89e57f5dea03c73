#pragma once

#include <vector>

#include "strata/braid_word.hpp"
#include "strata/config_loop.hpp"

namespace strata {

constexpr double kDefaultSpanTolerance = 1e-8;
/// Below this every singular value counts as zero, whatever the tolerance.
constexpr double kSpanAbsoluteFloor = 1e-12;

/// Affine dimension of the span of `points`: the number of singular values
/// of the difference matrix above tol × the largest one.
int span_dimension(const Frame& points, double tol = kDefaultSpanTolerance);

struct SpanReport {
  std::size_t frame = 0;
  std::vector<double> singular_values;
  int dimension = 0;
};

std::vector<SpanReport> span_reports(const ConfigLoop& loop, double tol = kDefaultSpanTolerance);

struct ExtractOptions {
  /// Real parts closer than this (relative to the loop scale) are a tie.
  double tie_tolerance = 1e-9;
  /// Half-frame time shifts tried before a tie is reported.
  int tie_attempts = 8;
  /// Size of the constant generic offsets, relative to min_separation().
  double perturbation = 1e-3;
};

/// Braid traced by the points of a planar loop, read from the order of real
/// parts. For n > 1 all frames must lie on one complex line, which is
/// identified with ℂ by a unitary coordinate fixed at frame 0.
///
/// A counterclockwise exchange is positive: when two strands swap, the
/// letter is σ_p (p the left position) if the strand moving rightwards has
/// the smaller imaginary part at the crossing, σ_p^{-1} otherwise.
///
/// Throws LoopError on non-collinear frames, unresolved ties or crossings
/// that cannot be ordered into adjacent transpositions.
BraidWord extract_braid(const ConfigLoop& loop, const ExtractOptions& options = {});

struct WindingOptions {
  /// |det| below this times the product of column norms is degenerate.
  double degeneracy = 1e-12;
  double max_increment = 1.5707963267948966;  // π/2
  int refinement_budget = 1024;
};

/// Winding number about 0 of t ↦ det[x_1 - x_0, ..., x_n - x_0]. Requires
/// k = n + 1 and a loop that closes without relabelling.
long det_winding(const ConfigLoop& loop, const WindingOptions& options = {});

}  // namespace strata
