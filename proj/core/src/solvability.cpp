#include "planeform/solvability.hpp"

#include <algorithm>

#include "planeform/error.hpp"

namespace planeform {
namespace {

bool breakable_size(std::size_t n) { return n != 12 && n != 24 && n != 60; }

GroupKind witness_for(std::size_t min_orbit) {
  switch (min_orbit) {
    case 12: return GroupKind::Tetrahedral;
    case 24: return GroupKind::Octahedral;
    default: return GroupKind::Icosahedral;
  }
}

}  // namespace

Verdict check_solvable(std::span<const Point3> points, const Tolerance& tol) {
  if (!all_distinct(points, tol)) throw Error("point multiplicity");

  Verdict v;
  if (points.size() <= 3 || collinear(points, tol)) {
    v.group = analyze_symmetry(points, tol).group;
    return v;
  }

  const OrbitDecomposition dec = gamma_decomposition(points, tol);
  v.group = dec.group;
  v.orbit_sizes.reserve(dec.orbits.size());
  for (const auto& orbit : dec.orbits) v.orbit_sizes.push_back(orbit.size());

  if (v.group.is_2d()) return v;

  for (std::size_t k = 0; k < v.orbit_sizes.size(); ++k) {
    if (breakable_size(v.orbit_sizes[k])) {
      v.witness_orbit = k;
      return v;
    }
  }

  v.solvable = false;
  v.witness_group = witness_for(*std::min_element(v.orbit_sizes.begin(), v.orbit_sizes.end()));
  return v;
}

}  // namespace planeform
