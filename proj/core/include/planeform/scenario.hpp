#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "planeform/geometry.hpp"
#include "planeform/simulation.hpp"
#include "planeform/vec.hpp"

namespace planeform {

enum class FrameSpec { Identity, Random, Adversarial };

// A runnable description: where the points come from, how frames are
// assigned, which algorithm runs, and for how long. Serialized as
// line-oriented text with a versioned header (see parse_scenario).
struct Scenario {
  std::string algorithm = "plane_formation";  // or "go_to_midpoint"
  FrameSpec frames = FrameSpec::Random;
  std::uint64_t seed = 0;
  std::size_t max_cycles = 10;
  double tol_rel = Tolerance{}.rel;
  std::string generator;  // empty: explicit point list
  double radius = 1.0;
  std::vector<Point3> points;

  Tolerance tolerance() const { return Tolerance{tol_rel, Tolerance{}.abs}; }
};

// Text form:
//   planeform scenario 1
//   algorithm plane_formation
//   frames random|identity|adversarial
//   seed 42
//   cycles 10
//   tol 1e-09
//   generator cube 1            (or:  points 4  followed by "x y z" rows)
// Blank lines and '#' comments are ignored. Parse errors carry the line.
Scenario parse_scenario(std::istream& in);
void write_scenario(std::ostream& out, const Scenario& s);
std::string normalize_scenario(const std::string& text);

// Plain interop point lists: one "x y z" row per point, '#' comments.
std::vector<Point3> parse_points(std::istream& in);
void write_points(std::ostream& out, std::span<const Point3> points);

// Resolves generator or explicit list, and the frame assignment.
std::vector<Point3> scenario_points(const Scenario& s);
std::vector<Frame> scenario_frames(const Scenario& s, std::span<const Point3> points);

// Wraps a named algorithm for the simulator. "plane_formation" dispatches the
// full algorithm (optionally without its unsolvable-input guard, in which
// case stuck robots hold position); "go_to_midpoint" runs the demonstration
// walk and holds position once the input stops being a regular polyhedron.
Algorithm make_algorithm(const std::string& name, const Tolerance& tol,
                         bool guard_unsolvable = true);

// Versioned trace file: header (version, n, algorithm, seed), one block per
// cycle with "i x y z" rows, a group line and a conditions line, then the
// halt line. Deterministic formatting (%.17g) so equal runs produce equal
// bytes.
void write_trace(std::ostream& out, const Trace& trace, const std::string& algorithm,
                 std::uint64_t seed);

// Human-readable per-cycle summary plus terminal verification.
std::string format_report(const Trace& trace, const Tolerance& tol);

}  // namespace planeform
