#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "planeform/geometry.hpp"
#include "planeform/vec.hpp"

namespace planeform {

// Phase predicates over a configuration. They are nested: t1 is implied by
// t2, and t2 by t3, so exactly one of the four phase actions applies
// (prepare, break symmetry, land, stay).
struct Conditions {
  bool t1 = false;  // rotation group not 3D, or innermost orbit breakable
  bool t2 = false;  // rotation group is cyclic, dihedral, or degenerate planar
  bool t3 = false;  // configuration lies in a plane
};

// One face of the polyhedron spanned by the innermost orbit, as a vertex
// index list into the observation plus the face centroid. For a robot of
// that orbit, selectable faces are the incident ones; the icosidodecahedron
// restricts the selection to its pentagon faces.
struct FaceChoice {
  std::vector<std::size_t> vertices;
  Point3 center;
};

Conditions eval_conditions(std::span<const Point3> points, const Tolerance& tol = {});

// Moves the first breakable orbit (size outside {12, 24, 60}) onto a sphere
// of half the inner-ball radius; every other robot keeps its position.
// Requires a 3D group whose innermost orbit is unbreakable; otherwise
// "wrong phase", or "unsolvable input" when no breakable orbit exists.
Point3 prepare(std::span<const Point3> points, std::size_t self, const Tolerance& tol = {});

// Faces of the innermost-orbit polyhedron incident to `self`, sorted by
// centroid; empty when `self` is not on that orbit.
std::vector<FaceChoice> incident_faces(std::span<const Point3> points, std::size_t self,
                                       const Tolerance& tol = {});

// Symmetry breaking: a robot of the innermost orbit walks toward the center
// of a chosen incident face and stops 1/100 of an edge length short of it.
// The parameterless overload picks the incident face with lexicographically
// smallest centroid in the observation's coordinates.
Point3 break_symmetry(std::span<const Point3> points, std::size_t self,
                      const Tolerance& tol = {});
Point3 break_symmetry(std::span<const Point3> points, std::size_t self,
                      const FaceChoice& choice, const Tolerance& tol = {});

// The common landing plane of a configuration with a 2D rotation group:
// perpendicular to the rotation axis through the ball center, or for the
// trivial group the plane spanned by the innermost robot, its meridian robot
// and the ball center. Frame-independent.
Plane select_plane(std::span<const Point3> points, const Tolerance& tol = {});

// Landing point of `self` on F. Feet of perpendicular projection are used
// directly when free; colliding orbits perturb onto small circles around
// their feet, with mirror robots separated by their opposite senses of
// rotation, and feet at the ball center resolved through the vertex set
// Q(P). Destinations of distinct robots never coincide.
Point3 select_destination(std::span<const Point3> points, const Plane& plane,
                          std::size_t self, const Tolerance& tol = {});

// select_destination on select_plane's output.
Point3 land(std::span<const Point3> points, std::size_t self, const Tolerance& tol = {});

bool is_regular_polyhedron(std::span<const Point3> points, const Tolerance& tol = {});

// Indices of the edge-adjacent vertices of `self` in a regular polyhedron.
std::vector<std::size_t> incident_edges(std::span<const Point3> points, std::size_t self,
                                        const Tolerance& tol = {});

// Demonstration algorithm for regular polyhedra: walk along a chosen
// incident edge and stop 1/100 of an edge length before its midpoint. The
// parameterless overload picks the incident edge with lexicographically
// smallest midpoint; throws "non-polyhedral input" otherwise.
Point3 go_to_midpoint(std::span<const Point3> points, std::size_t self,
                      const Tolerance& tol = {});
Point3 go_to_midpoint(std::span<const Point3> points, std::size_t self,
                      std::size_t neighbor, const Tolerance& tol = {});

// Full per-cycle dispatch of the plane formation algorithm for one robot:
// pre-phase for a robot sitting on the ball center (everyone else waits),
// then prepare / break_symmetry / land / stay by the phase conditions.
// With guard_unsolvable set, a configuration that admits no progress (3D
// group, every orbit of size 12, 24 or 60) raises "unsolvable input";
// unguarded, the robot holds position instead.
Point3 plane_formation_step(std::span<const Point3> points, std::size_t self,
                            const Tolerance& tol = {}, bool guard_unsolvable = true);

}  // namespace planeform
