#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "planeform/geometry.hpp"

namespace planeform {

// A finite-order rotation about an axis through the origin. The axis is the
// canonical unit direction (zero vector for the identity); the angle is the
// unsigned rotation angle in (0, pi] (0 for the identity). `order` is the
// smallest k >= 1 with matrix^k = I.
struct RotationOp {
  Mat3 matrix;
  Vec3 axis{0, 0, 0};
  int order = 1;
  double angle = 0.0;
};

// Wraps a matrix into a RotationOp. Returns nullopt if the matrix is not a
// rotation (orthonormal, det +1) or its order exceeds the supported maximum
// of 60 (angles are snapped to the nearest 2 pi j / k within that range).
std::optional<RotationOp> make_rotation_op(const Mat3& m, const Tolerance& tol = {});

enum class GroupKind { Cyclic, Dihedral, Tetrahedral, Octahedral, Icosahedral, Collinear };

const char* to_string(GroupKind kind);

struct GroupClass;

// Compact label: "C_4", "D_2", "T", "O", "I", or "collinear".
std::string to_string(const GroupClass& group);

struct AxisFold {
  Vec3 direction;  // canonical unit direction
  int fold = 2;    // largest rotation order about this axis
};

struct GroupClass {
  GroupKind kind = GroupKind::Cyclic;
  int degree = 1;  // k for C_k, l for D_l; 0 for polyhedral kinds
  int order = 1;   // group order (0 for Collinear, whose group is infinite)
  std::vector<AxisFold> axes;
  // Single rotation axis for Cyclic k >= 2, principal axis for Dihedral,
  // line direction for Collinear; absent otherwise (and for D_2 classified
  // without point context).
  std::optional<Vec3> principal;

  bool is_3d() const {
    return kind == GroupKind::Tetrahedral || kind == GroupKind::Octahedral ||
           kind == GroupKind::Icosahedral;
  }
  bool is_2d() const { return kind == GroupKind::Cyclic || kind == GroupKind::Dihedral; }
};

// All rotations about the center of the smallest enclosing ball that map the
// point set onto itself. Requires at least two distinct points; throws
// "infinite rotation group (collinear)" on collinear input. The result always
// contains the identity and is sorted deterministically.
std::vector<RotationOp> enumerate_rotations(std::span<const Point3> points,
                                            const Tolerance& tol = {});

// Classifies a finite rotation group into C_k / D_l / T / O / I. The input
// must contain the identity and, when verify_closure is set, be closed under
// composition. `points` supplies the context needed to pick the D_2 principal
// axis; without it a D_2 result carries no principal.
GroupClass classify_rotation_group(std::span<const RotationOp> rotations,
                                   std::span<const Point3> points = {},
                                   const Tolerance& tol = {}, bool verify_closure = true);

// Principal axis of a D_2 group acting on `points`: per axis the signature is
// the sorted multiset of (distance to axis, |axial coordinate|) pairs taken
// about the enclosing-ball center. Returns the axis whose signature differs
// from both others, by lexicographically smallest signature when all three
// differ; throws "supergroup of D2 present" when all three are equal.
Vec3 principal_axis_d2(std::span<const Point3> points, const std::array<Vec3, 3>& axes,
                       const Tolerance& tol = {});

// Smallest subgroup isomorphic to the target polyhedral kind (T, O or I),
// found by deterministic generator-pair closure and matched by element-order
// profile; returns the whole group when it already equals the target and
// nullopt when no such subgroup exists.
std::optional<std::vector<RotationOp>> find_subgroup(std::span<const RotationOp> rotations,
                                                     GroupKind target,
                                                     const Tolerance& tol = {});

// True when rotating the point set about `center` reproduces it as a
// multiset within tolerance (greedy matching, so coincident points are
// handled).
bool preserves_configuration(std::span<const Point3> points, const Mat3& rotation,
                             const Point3& center, const Tolerance& tol = {});

// One-stop analysis: enclosing ball, full rotation group and classification.
// Collinear input yields kind Collinear with the line direction as principal
// and no rotations enumerated.
struct SymmetryInfo {
  Ball bounding;
  std::vector<RotationOp> rotations;
  GroupClass group;
};
SymmetryInfo analyze_symmetry(std::span<const Point3> points, const Tolerance& tol = {});

}  // namespace planeform
