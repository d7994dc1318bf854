#pragma once

#include <optional>
#include <span>
#include <vector>

#include "planeform/error.hpp"
#include "planeform/vec.hpp"

namespace planeform {

// Comparison threshold: relative epsilon scaled by the configuration extent,
// with an absolute floor for near-zero scales.
struct Tolerance {
  double rel = 1e-9;
  double abs = 1e-12;

  double eps(double scale) const { return std::max(rel * std::abs(scale), abs); }

  // Local views hold dimensionless altitudes and angles in radians; their
  // components carry more accumulated rounding than raw coordinates, so the
  // comparison threshold is widened by a fixed factor.
  double view_eps() const { return std::max(1e3 * rel, abs); }
};

struct Ball {
  Point3 center;
  double radius = 0.0;

  bool contains(const Point3& p, double slack) const {
    return distance(center, p) <= radius + slack;
  }
};

// Oriented plane {p : dot(normal, p) == offset} with unit normal.
struct Plane {
  Vec3 normal{0, 0, 1};
  double offset = 0.0;

  double signed_distance(const Point3& p) const { return dot(normal, p) - offset; }
  Point3 project(const Point3& p) const { return p - signed_distance(p) * normal; }
};

// Smallest ball containing every point (randomized move-to-front recursion,
// deterministic via a fixed shuffle seed). Throws on an empty input.
Ball smallest_enclosing_ball(std::span<const Point3> points);

// Largest ball centered at `center` whose interior contains no point.
// Throws "center occupied" when a point coincides with the center.
Ball innermost_empty_ball(std::span<const Point3> points, const Point3& center,
                          const Tolerance& tol = {});

// The unique linear rotation taking (a, b, a x b) to (a2, b2, a2 x b2), or
// nullopt when the result fails the orthonormality / det +1 verification
// (e.g. mismatched pair norms). Throws "collinear basis vectors" when a and b
// (or a2 and b2) do not span a plane.
std::optional<Mat3> rotation_from_vector_pairs(const Vec3& a, const Vec3& b, const Vec3& a2,
                                               const Vec3& b2, const Tolerance& tol = {});

// Unit direction with lexicographically nonnegative leading nonzero
// coordinate, so that a line through the origin has one representation.
Vec3 canonical_axis(const Vec3& direction);

struct PlaneFit {
  Plane plane;
  double max_deviation = 0.0;  // max |signed distance| over the points
};
PlaneFit fit_plane(std::span<const Point3> points);

struct LineFit {
  Point3 point;
  Vec3 direction{0, 0, 1};
  double max_deviation = 0.0;  // max point-line distance
};
LineFit fit_line(std::span<const Point3> points);

// Deviation thresholds are relative to the circumradius rad(B(P)).
bool coplanar(std::span<const Point3> points, const Tolerance& tol = {});
bool collinear(std::span<const Point3> points, const Tolerance& tol = {});
bool all_distinct(std::span<const Point3> points, const Tolerance& tol = {});

// Eigen decomposition of a symmetric 3x3 matrix (Jacobi sweeps); eigenvalues
// ascending, eigenvectors[i] matching eigenvalues[i], orthonormal.
struct SymmetricEigen {
  double values[3];
  Vec3 vectors[3];
};
SymmetricEigen symmetric_eigen(const Mat3& m);

}  // namespace planeform
