#include "planeform/simulation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "planeform/error.hpp"
#include "planeform/symmetry.hpp"

namespace planeform {
namespace {

double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

Mat3 quaternion_matrix(double x, double y, double z, double w) {
  Mat3 r;
  r.m[0][0] = 1 - 2 * (y * y + z * z);
  r.m[0][1] = 2 * (x * y - z * w);
  r.m[0][2] = 2 * (x * z + y * w);
  r.m[1][0] = 2 * (x * y + z * w);
  r.m[1][1] = 1 - 2 * (x * x + z * z);
  r.m[1][2] = 2 * (y * z - x * w);
  r.m[2][0] = 2 * (x * z - y * w);
  r.m[2][1] = 2 * (y * z + x * w);
  r.m[2][2] = 1 - 2 * (x * x + y * y);
  return r;
}

}  // namespace

std::vector<Point3> observe(std::span<const Point3> points, const Frame& frame) {
  const Mat3 rt = frame.rotation.transposed();
  const double inv = 1.0 / frame.scale;
  std::vector<Point3> local;
  local.reserve(points.size());
  for (const Point3& p : points) local.push_back(inv * (rt * (p - frame.origin)));
  return local;
}

Point3 to_global(const Point3& local, const Frame& frame) {
  return frame.origin + frame.scale * (frame.rotation * local);
}

StepResult fsync_step(std::span<const Point3> points, std::span<const Frame> frames,
                      const Algorithm& algorithm) {
  if (points.size() != frames.size()) throw Error("frame count mismatch");

  StepResult out;
  out.positions.resize(points.size());
  out.frames.assign(frames.begin(), frames.end());

  for (std::size_t i = 0; i < points.size(); ++i) {
    // The observation is an anonymous snapshot: sorted, with the robot
    // itself recoverable as the entry at the local origin.
    std::vector<Point3> local = observe(points, frames[i]);
    std::sort(local.begin(), local.end(), lex_less);
    std::size_t self = 0;
    double best = std::numeric_limits<double>::max();
    for (std::size_t j = 0; j < local.size(); ++j) {
      const double d = norm2(local[j]);
      if (d < best) {
        best = d;
        self = j;
      }
    }
    const Point3 dest = algorithm(local, self);
    out.positions[i] = to_global(dest, frames[i]);
  }
  for (std::size_t i = 0; i < points.size(); ++i) out.frames[i].origin = out.positions[i];
  return out;
}

Trace run(std::span<const Point3> initial, std::span<const Frame> frames,
          const Algorithm& algorithm, std::size_t max_cycles, const Tolerance& tol) {
  if (max_cycles < 1) throw Error("max_cycles must be at least 1");

  Trace trace;
  std::vector<Point3> current(initial.begin(), initial.end());
  std::vector<Frame> cur_frames(frames.begin(), frames.end());

  for (std::size_t t = 0;; ++t) {
    TraceEntry entry;
    entry.cycle = t;
    entry.configuration = current;
    entry.coplanar = coplanar(current, tol);
    entry.multiplicity = !all_distinct(current, tol);
    try {
      entry.conditions = eval_conditions(current, tol);
    } catch (const Error&) {
      entry.conditions.reset();
    }
    try {
      entry.group = to_string(analyze_symmetry(current, tol).group);
    } catch (const Error& e) {
      entry.group = std::string("unclassified: ") + e.what();
    }

    StepResult step;
    try {
      step = fsync_step(current, cur_frames, algorithm);
    } catch (const Error& e) {
      trace.entries.push_back(std::move(entry));
      trace.halt = HaltReason::Error;
      trace.error = e.what();
      return trace;
    }
    entry.destinations = step.positions;

    const double eps = tol.eps(current.empty() ? 0.0 : smallest_enclosing_ball(current).radius);
    bool moved = false;
    for (std::size_t i = 0; i < current.size(); ++i)
      if (distance(current[i], step.positions[i]) > eps) moved = true;

    if (entry.coplanar && !moved) {
      trace.entries.push_back(std::move(entry));
      trace.halt = HaltReason::Terminal;
      return trace;
    }
    trace.entries.push_back(std::move(entry));
    if (t == max_cycles) {
      trace.halt = HaltReason::MaxCycles;
      return trace;
    }
    current = std::move(step.positions);
    cur_frames = std::move(step.frames);
  }
}

TerminalReport verify_terminal(std::span<const Point3> points, const Tolerance& tol) {
  TerminalReport r;
  if (points.empty()) {
    r.coplanar = true;
    r.distinct = true;
    return r;
  }
  r.radius = smallest_enclosing_ball(points).radius;
  r.coplanar = coplanar(points, tol);
  r.collinear = collinear(points, tol);
  if (points.size() >= 2) {
    const PlaneFit fit = fit_plane(points);
    for (const Point3& p : points)
      r.max_deviation = std::max(r.max_deviation, std::abs(fit.plane.signed_distance(p)));
  }
  r.distinct = all_distinct(points, tol);
  r.min_gap = std::numeric_limits<double>::max();
  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t j = i + 1; j < points.size(); ++j)
      r.min_gap = std::min(r.min_gap, distance(points[i], points[j]));
  if (points.size() < 2) r.min_gap = 0.0;
  return r;
}

Mat3 random_rotation(std::mt19937_64& rng) {
  const double u1 = uniform01(rng);
  const double u2 = uniform01(rng);
  const double u3 = uniform01(rng);
  const double two_pi = 2.0 * std::numbers::pi;
  const double a = std::sqrt(1.0 - u1);
  const double b = std::sqrt(u1);
  return quaternion_matrix(a * std::sin(two_pi * u2), a * std::cos(two_pi * u2),
                           b * std::sin(two_pi * u3), b * std::cos(two_pi * u3));
}

double random_scale(std::mt19937_64& rng) {
  return std::pow(10.0, 2.0 * uniform01(rng) - 1.0);
}

std::vector<Frame> identity_frames(std::span<const Point3> points) {
  std::vector<Frame> frames(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) frames[i].origin = points[i];
  return frames;
}

std::vector<Frame> random_frames(std::span<const Point3> points, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Frame> frames(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    frames[i].rotation = random_rotation(rng);
    frames[i].scale = random_scale(rng);
    frames[i].origin = points[i];
  }
  return frames;
}

}  // namespace planeform
