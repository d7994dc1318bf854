#pragma once

#include <string>
#include <vector>

#include "planeform/symmetry.hpp"
#include "planeform/vec.hpp"

namespace planeform {

// Rotations of the reference tetrahedral, octahedral or icosahedral group:
// the orientation with the coordinate axes as 2-fold (T), 4-fold (O) and
// 2-fold (I) axes. Throws for non-polyhedral kinds.
std::vector<RotationOp> canonical_group(GroupKind kind);

// Origin-centered vertex sets scaled to the requested circumradius.
//
// Accepted names: tetrahedron, octahedron, cube, icosahedron, dodecahedron,
// cuboctahedron, icosidodecahedron, truncated_tetrahedron, truncated_cube;
// the families prism(k) and pyramid(k) for k >= 3; sphenoid or
// sphenoid(a,c) for the tetragonal disphenoid with group D_2; and
// orbit(T|O|I) or orbit(T|O|I,x,y,z) for the group orbit of a seed
// direction (the default seed is generic, giving a full free orbit).
// Throws "unknown generator" otherwise.
std::vector<Point3> generate_polyhedron(const std::string& name, double circumradius = 1.0);

std::vector<std::string> generator_names();

}  // namespace planeform
