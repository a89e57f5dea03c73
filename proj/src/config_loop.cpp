#include "strata/config_loop.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include <nlohmann/json.hpp>

#include "word_tokens.hpp"

namespace strata {

namespace {

double distance(const Point& a, const Point& b) {
  double s = 0.0;
  for (std::size_t m = 0; m < a.size(); ++m) s += std::norm(a[m] - b[m]);
  return std::sqrt(s);
}

}  // namespace

ConfigLoop::ConfigLoop(int k, int n, std::vector<Frame> frames, double margin, double closure_tol)
    : k_(k), n_(n), frames_(std::move(frames)) {
  if (k_ < 1 || n_ < 1) throw LoopError("loop needs k >= 1 and n >= 1");
  if (frames_.size() < 2) throw LoopError("loop needs at least two frames");
  double scale = 1.0;
  for (std::size_t s = 0; s < frames_.size(); ++s) {
    const auto& frame = frames_[s];
    if (static_cast<int>(frame.size()) != k_) {
      throw LoopError("frame " + std::to_string(s) + " does not have k points");
    }
    for (const auto& p : frame) {
      if (static_cast<int>(p.size()) != n_) throw LoopError("frame " + std::to_string(s) + " has a point outside C^n");
      for (const auto& c : p) {
        if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) throw LoopError("non-finite coordinate");
        scale = std::max(scale, std::abs(c));
      }
    }
  }
  scale_ = scale;

  min_separation_ = std::numeric_limits<double>::infinity();
  for (std::size_t s = 0; s < frames_.size(); ++s) {
    for (int a = 0; a < k_; ++a) {
      for (int b = a + 1; b < k_; ++b) {
        const double d = distance(frames_[s][a], frames_[s][b]);
        if (d <= margin * scale_) {
          throw LoopError("points " + std::to_string(a) + " and " + std::to_string(b) + " collide at frame " +
                          std::to_string(s));
        }
        min_separation_ = std::min(min_separation_, d);
      }
    }
  }

  const auto& first = frames_.front();
  const auto& last = frames_.back();
  const double tol = closure_tol * scale_;
  for (int a = 0; a < k_; ++a) {
    if (distance(first[a], last[a]) > tol) closes_ordered_ = false;
  }
  if (!closes_ordered_) {
    for (int a = 0; a < k_; ++a) {
      const bool matched = std::any_of(first.begin(), first.end(), [&](const Point& p) { return distance(p, last[a]) <= tol; });
      if (!matched) throw LoopError("loop does not close: last frame is not a relabelling of the first");
    }
  }
}

ConfigLoop make_gamma_loop(int k, int frames) {
  if (k < 2) throw std::invalid_argument("gamma loop needs k >= 2");
  const int floor = 8 * k * k;
  if (frames == 0) frames = floor;
  if (frames < floor) {
    throw std::invalid_argument("gamma loop needs at least " + std::to_string(floor) + " frames for k = " +
                                std::to_string(k));
  }
  std::vector<Frame> out(static_cast<std::size_t>(frames));
  for (int s = 0; s < frames; ++s) {
    const double t = static_cast<double>(s) / (frames - 1);
    const Complex z = std::polar(1.0, 2.0 * std::numbers::pi * t);
    Frame frame;
    for (int j = 1; j <= k; ++j) frame.push_back(Point{static_cast<double>(j) * z, Complex{}});
    out[s] = std::move(frame);
  }
  out.back() = out.front();
  return ConfigLoop(k, 2, std::move(out));
}

ConfigLoop make_h_loop(int n, int frames) {
  if (n < 1) throw std::invalid_argument("h loop needs n >= 1");
  if (frames == 0) frames = 64;
  if (frames < 64) throw std::invalid_argument("h loop needs at least 64 frames");
  std::vector<Frame> out(static_cast<std::size_t>(frames));
  for (int s = 0; s < frames; ++s) {
    const double t = static_cast<double>(s) / (frames - 1);
    const Complex z = std::polar(1.0, 2.0 * std::numbers::pi * t);
    Frame frame(n + 1, Point(n));
    for (int j = 1; j < n; ++j) frame[j][j - 1] = 1.0;
    frame[n][n - 1] = z;
    out[s] = std::move(frame);
  }
  out.back() = out.front();
  return ConfigLoop(n + 1, n, std::move(out));
}

ConfigLoop reverse(const ConfigLoop& loop) {
  std::vector<Frame> frames(loop.frames().rbegin(), loop.frames().rend());
  return ConfigLoop(loop.k(), loop.n(), std::move(frames));
}

ConfigLoop concatenate(const ConfigLoop& first, const ConfigLoop& second) {
  if (first.k() != second.k() || first.n() != second.n()) throw LoopError("cannot concatenate loops of different shape");
  const double tol = ConfigLoop::kDefaultClosureTol * std::max(first.scale(), second.scale());
  for (int a = 0; a < first.k(); ++a) {
    if (distance(first.frames().back()[a], second.frames().front()[a]) > tol) {
      throw LoopError("loops do not meet: end of the first differs from the start of the second");
    }
  }
  std::vector<Frame> frames = first.frames();
  frames.insert(frames.end(), second.frames().begin() + 1, second.frames().end());
  return ConfigLoop(first.k(), first.n(), std::move(frames));
}

Frame interpolate(const ConfigLoop& loop, double time) {
  const auto last = static_cast<double>(loop.frame_count() - 1);
  if (!(time >= 0.0 && time <= last)) throw LoopError("interpolation time outside the loop");
  const auto s = std::min(static_cast<std::size_t>(time), loop.frame_count() - 2);
  const double u = time - static_cast<double>(s);
  Frame out = loop.frames()[s];
  const Frame& next = loop.frames()[s + 1];
  for (int a = 0; a < loop.k(); ++a) {
    for (int m = 0; m < loop.n(); ++m) out[a][m] = (1.0 - u) * out[a][m] + u * next[a][m];
  }
  return out;
}

ConfigLoop refine(const ConfigLoop& loop) {
  std::vector<Frame> frames;
  frames.reserve(2 * loop.frame_count() - 1);
  for (std::size_t s = 0; s + 1 < loop.frame_count(); ++s) {
    frames.push_back(loop.frames()[s]);
    frames.push_back(interpolate(loop, static_cast<double>(s) + 0.5));
  }
  frames.push_back(loop.frames().back());
  return ConfigLoop(loop.k(), loop.n(), std::move(frames));
}

std::string to_json(const ConfigLoop& loop) {
  nlohmann::ordered_json out;
  out["k"] = loop.k();
  out["n"] = loop.n();
  auto frames = nlohmann::json::array();
  for (const auto& frame : loop.frames()) {
    auto f = nlohmann::json::array();
    for (const auto& p : frame) {
      auto q = nlohmann::json::array();
      for (const auto& c : p) q.push_back({c.real(), c.imag()});
      f.push_back(std::move(q));
    }
    frames.push_back(std::move(f));
  }
  out["frames"] = std::move(frames);
  out["closed"] = true;
  return out.dump();
}

ConfigLoop loop_from_json(std::string_view text) {
  try {
    const auto doc = nlohmann::json::parse(text);
    const int k = doc.at("k").get<int>();
    const int n = doc.at("n").get<int>();
    if (doc.contains("closed") && !doc.at("closed").get<bool>()) throw LoopError("loop is marked as not closed");
    std::vector<Frame> frames;
    for (const auto& f : doc.at("frames")) {
      Frame frame;
      for (const auto& p : f) {
        Point point;
        for (const auto& c : p) {
          if (c.size() != 2) throw LoopError("complex coordinates must be [re, im] pairs");
          point.emplace_back(c.at(0).get<double>(), c.at(1).get<double>());
        }
        frame.push_back(std::move(point));
      }
      frames.push_back(std::move(frame));
    }
    return ConfigLoop(k, n, std::move(frames));
  } catch (const nlohmann::json::exception& e) {
    throw LoopError(std::string("malformed loop JSON: ") + e.what());
  }
}

ConfigLoop generate_named_loop(std::string_view spec) {
  const auto colon = spec.find(':');
  if (colon == std::string_view::npos) throw std::invalid_argument("loop spec must look like gamma:k=4 or h:n=3");
  const std::string kind = detail::trim(spec.substr(0, colon));
  int size = -1;
  int frames = 0;
  for (const auto& field : detail::split_top_level(spec.substr(colon + 1), ',')) {
    const auto eq = field.find('=');
    if (eq == std::string::npos) throw std::invalid_argument("loop parameter '" + field + "' needs a value");
    const std::string key = detail::trim(field.substr(0, eq));
    const std::string value = detail::trim(field.substr(eq + 1));
    std::size_t used = 0;
    int parsed = 0;
    try {
      parsed = std::stoi(value, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (value.empty() || used != value.size()) throw std::invalid_argument("loop parameter '" + key + "' is not an integer");
    if ((kind == "gamma" && key == "k") || (kind == "h" && key == "n")) {
      size = parsed;
    } else if (key == "frames") {
      frames = parsed;
    } else {
      throw std::invalid_argument("unknown loop parameter '" + key + "'");
    }
  }
  if (size < 0) throw std::invalid_argument("loop spec is missing its size parameter");
  if (frames < 0) throw std::invalid_argument("frame count must be positive");
  if (kind == "gamma") return make_gamma_loop(size, frames);
  if (kind == "h") return make_h_loop(size, frames);
  throw std::invalid_argument("unknown loop family '" + kind + "'");
}

}  // namespace strata
