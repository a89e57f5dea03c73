#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace strata {

using Complex = std::complex<double>;
/// A point of ℂ^n.
using Point = std::vector<Complex>;
/// k labelled points.
using Frame = std::vector<Point>;

/// Geometric failure while building or analysing a loop.
class LoopError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A sampled closed path of k labelled points in ℂ^n.
///
/// Closure is up to relabelling: the last frame must be a permutation of the
/// first, so paths that close only in the unordered configuration space are
/// accepted. `closes_ordered()` tells the two apart.
class ConfigLoop {
 public:
  static constexpr double kDefaultMargin = 1e-9;
  static constexpr double kDefaultClosureTol = 1e-9;

  /// Throws LoopError on shape mismatch, colliding points or a path that
  /// does not close. Both tolerances are relative to the loop's coordinate
  /// scale.
  ConfigLoop(int k, int n, std::vector<Frame> frames, double margin = kDefaultMargin,
             double closure_tol = kDefaultClosureTol);

  int k() const { return k_; }
  int n() const { return n_; }
  const std::vector<Frame>& frames() const { return frames_; }
  std::size_t frame_count() const { return frames_.size(); }

  /// Largest coordinate modulus over all frames (at least 1).
  double scale() const { return scale_; }
  /// Smallest distance between two points of one frame, over all frames.
  double min_separation() const { return min_separation_; }
  bool closes_ordered() const { return closes_ordered_; }

 private:
  int k_;
  int n_;
  std::vector<Frame> frames_;
  double scale_ = 1.0;
  double min_separation_ = 0.0;
  bool closes_ordered_ = true;
};

/// γ(z) = ((z, 0), (2z, 0), ..., (kz, 0)) with z = exp(2πi t), t = s/(frames-1).
/// Requires k >= 2 and frames >= 8k²; frames = 0 selects that floor.
ConfigLoop make_gamma_loop(int k, int frames = 0);

/// h(z) = (0, e_1, ..., e_{n-1}, z e_n) on the unit circle. Requires n >= 1
/// and frames >= 64; frames = 0 selects 64.
ConfigLoop make_h_loop(int n, int frames = 0);

/// Same path traversed backwards.
ConfigLoop reverse(const ConfigLoop& loop);
/// `first` then `second`; the last frame of `first` must equal the first
/// frame of `second` point by point.
ConfigLoop concatenate(const ConfigLoop& first, const ConfigLoop& second);
/// Inserts the linear midpoint between every pair of consecutive frames.
ConfigLoop refine(const ConfigLoop& loop);
/// Position at fractional frame index `time` by linear interpolation.
Frame interpolate(const ConfigLoop& loop, double time);

/// {"k": int, "n": int, "frames": [[[re, im] × n] × k] × T, "closed": true}
std::string to_json(const ConfigLoop& loop);
/// Throws LoopError on malformed JSON or an invalid loop.
ConfigLoop loop_from_json(std::string_view text);

/// "gamma:k=4", "gamma:k=4,frames=512", "h:n=3", "h:n=2,frames=100".
ConfigLoop generate_named_loop(std::string_view spec);

}  // namespace strata
