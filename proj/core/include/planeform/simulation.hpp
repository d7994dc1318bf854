#pragma once

#include <functional>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "planeform/formation.hpp"
#include "planeform/geometry.hpp"
#include "planeform/vec.hpp"

namespace planeform {

// A robot's local coordinate system: right-handed rotation, positive uniform
// scale, origin at the robot's current position. A global point p appears
// locally as (1/scale) * rotation^T * (p - origin).
struct Frame {
  Mat3 rotation = Mat3::identity();
  double scale = 1.0;
  Point3 origin{};
};

std::vector<Point3> observe(std::span<const Point3> points, const Frame& frame);
Point3 to_global(const Point3& local, const Frame& frame);

// A per-robot move rule: local observation plus own index (the observation
// entry sitting at the local origin) to a local destination.
using Algorithm = std::function<Point3(std::span<const Point3>, std::size_t)>;

struct StepResult {
  std::vector<Point3> positions;
  std::vector<Frame> frames;  // input frames with origins moved along
};

// One fully synchronous Look-Compute-Move cycle: every robot observes the
// same configuration, computes in its own frame, and all moves commit
// atomically.
StepResult fsync_step(std::span<const Point3> points, std::span<const Frame> frames,
                      const Algorithm& algorithm);

struct TraceEntry {
  std::size_t cycle = 0;
  std::vector<Point3> configuration;
  std::vector<Point3> destinations;  // computed this cycle; empty if never computed
  std::optional<Conditions> conditions;
  std::string group;  // group label, or the reason classification failed
  bool coplanar = false;
  bool multiplicity = false;
};

enum class HaltReason { Terminal, MaxCycles, Error };

struct Trace {
  std::vector<TraceEntry> entries;
  HaltReason halt = HaltReason::MaxCycles;
  std::string error;  // set when halt == Error

  bool terminal() const { return halt == HaltReason::Terminal; }
};

// Runs cycles until the configuration is planar and nobody moves, an
// algorithm error surfaces, or max_cycles steps have been taken. Entry 0 is
// the initial configuration; every entry carries the group classification
// and phase conditions of its configuration (multiplicity is flagged, not
// fatal, so adversarial executions remain observable).
Trace run(std::span<const Point3> initial, std::span<const Frame> frames,
          const Algorithm& algorithm, std::size_t max_cycles, const Tolerance& tol = {});

struct TerminalReport {
  bool coplanar = false;
  double max_deviation = 0.0;  // from the best-fit plane, absolute
  double radius = 0.0;         // enclosing-ball radius for relative scaling
  bool distinct = false;
  double min_gap = 0.0;
  bool collinear = false;
};

TerminalReport verify_terminal(std::span<const Point3> points, const Tolerance& tol = {});

// Uniform random rotation (quaternion method) and log-uniform scale in
// [0.1, 10]; both consume a fixed number of engine draws, keeping streams
// reproducible across platforms.
Mat3 random_rotation(std::mt19937_64& rng);
double random_scale(std::mt19937_64& rng);

std::vector<Frame> identity_frames(std::span<const Point3> points);
std::vector<Frame> random_frames(std::span<const Point3> points, std::uint64_t seed);

}  // namespace planeform
