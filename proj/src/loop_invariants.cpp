#include "strata/loop_invariants.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <tuple>

#include "strata/kernels.hpp"

namespace strata {

namespace {

int dimension_from(const std::vector<double>& sv, double tol) {
  if (sv.empty() || sv.front() < kSpanAbsoluteFloor) return 0;
  const double cut = std::max(tol * sv.front(), kSpanAbsoluteFloor);
  return static_cast<int>(std::count_if(sv.begin(), sv.end(), [cut](double s) { return s > cut; }));
}

// Affine coordinate on the common complex line of all frames.
std::vector<std::vector<Complex>> planar_track(const ConfigLoop& loop) {
  const auto& frames = loop.frames();
  std::vector<std::vector<Complex>> track(frames.size(), std::vector<Complex>(loop.k()));
  if (loop.n() == 1) {
    for (std::size_t s = 0; s < frames.size(); ++s) {
      for (int a = 0; a < loop.k(); ++a) track[s][a] = frames[s][a][0];
    }
    return track;
  }
  const Point& anchor = frames[0][0];
  int far = 1;
  double far_dist = -1.0;
  for (int a = 1; a < loop.k(); ++a) {
    double d = 0.0;
    for (int m = 0; m < loop.n(); ++m) d += std::norm(frames[0][a][m] - anchor[m]);
    if (d > far_dist) {
      far_dist = d;
      far = a;
    }
  }
  Point u(loop.n());
  const double len = std::sqrt(far_dist);
  for (int m = 0; m < loop.n(); ++m) u[m] = (frames[0][far][m] - anchor[m]) / len;
  // Fix the phase so the first significant component of u is real positive;
  // a line spanned by a real vector then keeps its own coordinate.
  for (int m = 0; m < loop.n(); ++m) {
    if (std::abs(u[m]) > 1e-6) {
      const Complex phase = std::conj(u[m]) / std::abs(u[m]);
      for (auto& c : u) c *= phase;
      break;
    }
  }

  const double tol = 1e-8 * loop.scale();
  for (std::size_t s = 0; s < frames.size(); ++s) {
    for (int a = 0; a < loop.k(); ++a) {
      Complex c{};
      for (int m = 0; m < loop.n(); ++m) c += std::conj(u[m]) * (frames[s][a][m] - anchor[m]);
      double residual = 0.0;
      for (int m = 0; m < loop.n(); ++m) residual += std::norm(frames[s][a][m] - anchor[m] - c * u[m]);
      if (std::sqrt(residual) > tol) {
        throw LoopError("frame " + std::to_string(s) + " does not lie on the complex line of frame 0");
      }
      track[s][a] = c;
    }
  }
  return track;
}

bool has_tie(const std::vector<Complex>& frame, double tol) {
  for (std::size_t a = 0; a < frame.size(); ++a) {
    for (std::size_t b = a + 1; b < frame.size(); ++b) {
      if (std::abs(frame[a].real() - frame[b].real()) <= tol) return true;
    }
  }
  return false;
}

std::vector<int> order_by_real_part(const std::vector<Complex>& frame) {
  std::vector<int> order(frame.size());
  for (std::size_t a = 0; a < order.size(); ++a) order[a] = static_cast<int>(a);
  std::sort(order.begin(), order.end(), [&](int a, int b) { return frame[a].real() < frame[b].real(); });
  return order;
}

std::vector<Complex> lerp(const std::vector<Complex>& a, const std::vector<Complex>& b, double u) {
  std::vector<Complex> out(a.size());
  for (std::size_t j = 0; j < a.size(); ++j) out[j] = (1.0 - u) * a[j] + u * b[j];
  return out;
}

struct Crossing {
  double time;
  int a;
  int b;
};

}  // namespace

int span_dimension(const Frame& points, double tol) {
  if (points.empty()) throw std::invalid_argument("span_dimension needs at least one point");
  return dimension_from(kernels::frame_singular_values_serial({points}).front(), tol);
}

std::vector<SpanReport> span_reports(const ConfigLoop& loop, double tol) {
  auto values = kernels::frame_singular_values_parallel(loop.frames());
  std::vector<SpanReport> out(values.size());
  for (std::size_t s = 0; s < values.size(); ++s) {
    out[s].frame = s;
    out[s].dimension = dimension_from(values[s], tol);
    out[s].singular_values = std::move(values[s]);
  }
  return out;
}

BraidWord extract_braid(const ConfigLoop& loop, const ExtractOptions& options) {
  const int k = loop.k();
  BraidWord word(k);
  if (k == 1) return word;
  auto track = planar_track(loop);

  // Constant generic offsets keep the loop in its homotopy class (they are
  // far below the separation) and split simultaneous crossings.
  const double delta = options.perturbation * loop.min_separation();
  for (int a = 0; a < k; ++a) {
    const double r = 0.5 + 0.5 * std::fmod(0.6180339887498949 * (a + 1), 1.0);
    const double phi = 2.0 * std::numbers::pi * std::fmod(0.7548776662466927 * (a + 1), 1.0);
    const Complex offset = std::polar(delta * r, phi);
    for (auto& frame : track) frame[a] += offset;
  }

  const double tie = options.tie_tolerance * loop.scale();
  const std::size_t last = track.size() - 1;
  if (has_tie(track.front(), tie) || has_tie(track.back(), tie)) {
    throw LoopError("two points share a real part at the base frame");
  }
  for (std::size_t s = 1; s < last; ++s) {
    if (!has_tie(track[s], tie)) continue;
    const auto original = track[s];
    bool resolved = false;
    double shift = 0.5;
    for (int attempt = 0; attempt < options.tie_attempts && !resolved; ++attempt) {
      const bool forward = attempt % 2 == 0;
      track[s] = forward ? lerp(original, track[s + 1], shift) : lerp(original, track[s - 1], shift);
      resolved = !has_tie(track[s], tie);
      if (!forward) shift /= 2.0;
    }
    if (!resolved) throw LoopError("unresolved tie between real parts at frame " + std::to_string(s));
  }

  std::vector<int> order = order_by_real_part(track.front());
  std::vector<int> position(k);
  for (int p = 0; p < k; ++p) position[order[p]] = p;

  for (std::size_t s = 0; s < last; ++s) {
    const auto& x0 = track[s];
    const auto& x1 = track[s + 1];
    std::vector<Crossing> events;
    for (int a = 0; a < k; ++a) {
      for (int b = a + 1; b < k; ++b) {
        const double d0 = x0[a].real() - x0[b].real();
        const double d1 = x1[a].real() - x1[b].real();
        if ((d0 < 0.0) != (d1 < 0.0)) events.push_back({d0 / (d0 - d1), a, b});
      }
    }
    std::sort(events.begin(), events.end(),
              [](const Crossing& l, const Crossing& r) { return std::tie(l.time, l.a, l.b) < std::tie(r.time, r.a, r.b); });
    for (const auto& e : events) {
      const int left = position[e.a] < position[e.b] ? e.a : e.b;
      const int right = left == e.a ? e.b : e.a;
      if (position[right] != position[left] + 1) {
        throw LoopError("frames too coarse: strands " + std::to_string(e.a) + " and " + std::to_string(e.b) +
                        " cross while not adjacent between frames " + std::to_string(s) + " and " +
                        std::to_string(s + 1));
      }
      const double y_left = (1.0 - e.time) * x0[left].imag() + e.time * x1[left].imag();
      const double y_right = (1.0 - e.time) * x0[right].imag() + e.time * x1[right].imag();
      if (std::abs(y_left - y_right) <= tie) {
        throw LoopError("strands " + std::to_string(e.a) + " and " + std::to_string(e.b) + " collide near frame " +
                        std::to_string(s));
      }
      const int p = position[left];
      word.push_back({p + 1, y_left < y_right ? 1 : -1});
      std::swap(order[p], order[p + 1]);
      position[order[p]] = p;
      position[order[p + 1]] = p + 1;
    }
  }

  if (order != order_by_real_part(track.back())) {
    throw LoopError("frames too coarse: crossings do not account for the final order");
  }
  return word;
}

long det_winding(const ConfigLoop& loop, const WindingOptions& options) {
  const int n = loop.n();
  if (loop.k() != n + 1) throw LoopError("det_winding needs k = n + 1 points");
  if (!loop.closes_ordered()) throw LoopError("det_winding needs a loop that closes without relabelling");

  const auto check = [&](const Frame& frame, Complex det, double where) {
    double norms = 1.0;
    for (int c = 1; c <= n; ++c) {
      double col = 0.0;
      for (int r = 0; r < n; ++r) col += std::norm(frame[c][r] - frame[0][r]);
      norms *= std::sqrt(col);
    }
    if (!(std::abs(det) > options.degeneracy * norms)) {
      throw LoopError("degenerate span: determinant vanishes near frame " + std::to_string(where));
    }
  };

  const auto dets = kernels::frame_determinants_parallel(loop.frames(), n);
  for (std::size_t s = 0; s < dets.size(); ++s) check(loop.frames()[s], dets[s], static_cast<double>(s));

  int budget = options.refinement_budget;
  // Argument change over [t0, t1], halving until each step is below the cap.
  std::function<double(double, Complex, double, Complex)> increment = [&](double t0, Complex d0, double t1,
                                                                           Complex d1) -> double {
    const double step = std::arg(d1 / d0);
    if (std::abs(step) < options.max_increment) return step;
    if (budget-- <= 0) throw LoopError("winding refinement budget exceeded");
    const double tm = 0.5 * (t0 + t1);
    const Frame mid = interpolate(loop, tm);
    const Complex dm = kernels::frame_determinants_serial({mid}, n).front();
    check(mid, dm, tm);
    return increment(t0, d0, tm, dm) + increment(tm, dm, t1, d1);
  };

  double total = 0.0;
  for (std::size_t s = 0; s + 1 < dets.size(); ++s) {
    total += increment(static_cast<double>(s), dets[s], static_cast<double>(s + 1), dets[s + 1]);
  }
  const double turns = total / (2.0 * std::numbers::pi);
  const double rounded = std::round(turns);
  if (std::abs(turns - rounded) > 1e-6) throw LoopError("argument increments do not close up to a whole turn");
  return static_cast<long>(rounded);
}

}  // namespace strata
