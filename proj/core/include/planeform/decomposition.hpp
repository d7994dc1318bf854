#pragma once

#include <span>
#include <vector>

#include "planeform/symmetry.hpp"

namespace planeform {

// One observed robot in spherical-log coordinates: altitude normalized
// between the innermost and outermost shells, longitude measured
// counter-clockwise (as seen from the observer's pole looking down at the
// center) from the meridian robot, latitude from the observer's pole.
struct ViewTriple {
  double altitude = 0.0;   // [0, 1]; identically 1 when all points share one shell
  double longitude = 0.0;  // [0, 2 pi); 0 for points on the axis
  double latitude = 0.0;   // [0, pi]
};

// Frame-independent encoding of what one robot sees: its own triple first,
// the meridian robot second, the rest sorted ascending lexicographically.
// The meridian robot is the off-axis robot minimizing the whole view.
struct LocalView {
  std::vector<ViewTriple> triples;
  std::size_t meridian = 0;  // index of the meridian robot in the input set
};

// -1 / 0 / +1 lexicographic comparison with per-component tolerance.
int compare(const LocalView& a, const LocalView& b, double eps);

// Requires a non-coplanar set with the ball center unoccupied; throws
// "coplanar point set" / "center occupied" otherwise.
LocalView local_view(std::span<const Point3> points, std::size_t observer,
                     const Tolerance& tol = {});

struct OrbitDecomposition {
  std::vector<std::vector<std::size_t>> orbits;  // indices into P, ordered
  std::vector<int> foldings;                     // per orbit: |stabilizer|
  GroupClass group;
  std::vector<RotationOp> rotations;
  Ball outer;  // B(P)
  Ball inner;  // I(P); radius 0 when the center is occupied
  bool center_occupied = false;
  // True when the orbit order is the local-view order. Coplanar or
  // center-occupied inputs fall back to (radius, invariant fingerprint) and
  // clear this flag.
  bool ordered = true;

  std::size_t orbit_containing(std::size_t point_index) const;
};

// Partition of P into orbits of its rotation group, ordered by the local
// views of orbit representatives. Throws on point multiplicity and on
// collinear input (infinite group).
OrbitDecomposition gamma_decomposition(std::span<const Point3> points,
                                       const Tolerance& tol = {});

// Orbit of a free point under a rotation set acting about `center`;
// duplicates merged, output sorted lexicographically.
std::vector<Point3> orbit_of(const Point3& seed, std::span<const RotationOp> rotations,
                             const Point3& center = {0, 0, 0}, const Tolerance& tol = {});

}  // namespace planeform
