#pragma once

#include <optional>
#include <span>
#include <vector>

#include "planeform/decomposition.hpp"
#include "planeform/geometry.hpp"
#include "planeform/symmetry.hpp"
#include "planeform/vec.hpp"

namespace planeform {

// Decision result for plane formability of a point set.
//
// A configuration resists plane formation exactly when its rotation group is
// three-dimensional and every orbit of the group decomposition has size 12,
// 24, or 60: an adversary can then keep a polyhedral subgroup alive forever.
struct Verdict {
  bool solvable = true;
  GroupClass group;
  std::vector<std::size_t> orbit_sizes;  // decomposition order; empty when skipped

  // Present iff unsolvable: the polyhedral group the adversary simulates,
  // chosen by the smallest orbit size (12 -> T, 24 -> O, 60 -> I).
  std::optional<GroupKind> witness_group;

  // Present iff solvable with a 3D rotation group: index (in decomposition
  // order) of the first orbit whose size is outside {12, 24, 60}.
  std::optional<std::size_t> witness_orbit;
};

// Decides plane formability. Sets of at most three points and collinear sets
// are trivially solvable and skip the decomposition (orbit_sizes left empty).
// Throws on point multiplicity.
Verdict check_solvable(std::span<const Point3> points, const Tolerance& tol = {});

}  // namespace planeform
