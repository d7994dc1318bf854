#include "planeform/formation.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>
#include <vector>

#include "doctest.h"
#include "planeform/decomposition.hpp"
#include "planeform/generators.hpp"
#include "planeform/simulation.hpp"
#include "planeform/solvability.hpp"
#include "support/oracles.hpp"

using namespace planeform;

namespace {

const double kPi = std::acos(-1.0);

// Icosahedron inside a free 24-orbit of O inside an octahedron: rotation
// group exactly T with orbit sizes 12, 12, 12, 6 and the 6-orbit outermost.
std::vector<Point3> three_shell_composite() {
  std::vector<Point3> pts = generate_polyhedron("icosahedron", 0.5);
  const std::vector<Point3> mid = generate_polyhedron("orbit(O)", 1.0);
  const std::vector<Point3> outer = generate_polyhedron("octahedron", 1.5);
  pts.insert(pts.end(), mid.begin(), mid.end());
  pts.insert(pts.end(), outer.begin(), outer.end());
  return pts;
}

// Square ring with two apexes at different heights: rotation group C_4 with
// both apex feet on the ball center.
std::vector<Point3> double_pyramid() {
  std::vector<Point3> pts{{1.2, 0, 0}, {0, 1.2, 0}, {-1.2, 0, 0}, {0, -1.2, 0}};
  pts.push_back({0, 0, 1.5});
  pts.push_back({0, 0, -1.2});
  return pts;
}

double min_pairwise_distance(std::span<const Point3> pts) {
  double best = std::numeric_limits<double>::max();
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j)
      best = std::min(best, distance(pts[i], pts[j]));
  return best;
}

}  // namespace

TEST_SUITE_BEGIN("formation");

TEST_CASE("phase predicates for the canonical configurations") {
  const std::vector<Point3> square{{1, 1, 0}, {1, -1, 0}, {-1, 1, 0}, {-1, -1, 0}};
  const Conditions planar = eval_conditions(square);
  CHECK(planar.t1);
  CHECK(planar.t2);
  CHECK(planar.t3);

  const Conditions dodeca = eval_conditions(generate_polyhedron("dodecahedron"));
  CHECK(dodeca.t1);  // orbit of 20 is breakable
  CHECK_FALSE(dodeca.t2);
  CHECK_FALSE(dodeca.t3);

  const Conditions icosa = eval_conditions(generate_polyhedron("icosahedron"));
  CHECK_FALSE(icosa.t1);
  CHECK_FALSE(icosa.t2);
  CHECK_FALSE(icosa.t3);
}

TEST_CASE("phase predicates nest across the generator catalogue") {
  for (const char* name :
       {"tetrahedron", "octahedron", "cube", "icosahedron", "dodecahedron", "cuboctahedron",
        "icosidodecahedron", "truncated_tetrahedron", "truncated_cube", "orbit(T)",
        "orbit(O)", "orbit(I)", "prism(5)", "pyramid(4)", "sphenoid"}) {
    const Conditions c = eval_conditions(generate_polyhedron(name));
    if (!c.t1) {
      CHECK_FALSE(c.t2);
      CHECK_FALSE(c.t3);
    }
    if (!c.t2) CHECK_FALSE(c.t3);
  }
}

TEST_CASE("prepare pulls the outermost breakable orbit inward") {
  const std::vector<Point3> pts = three_shell_composite();
  const OrbitDecomposition dec = gamma_decomposition(pts);
  CHECK(dec.group.kind == GroupKind::Tetrahedral);
  REQUIRE(dec.orbits.size() == 4);
  CHECK(dec.orbits[0].size() == 12);
  CHECK(dec.orbits[3].size() == 6);
  CHECK_FALSE(eval_conditions(pts).t1);

  std::vector<Point3> moved;
  for (std::size_t i = 0; i < pts.size(); ++i) moved.push_back(prepare(pts, i));

  for (std::size_t i = 0; i < 36; ++i) CHECK(distance(moved[i], pts[i]) <= 1e-12);
  for (std::size_t i = 36; i < 42; ++i) {
    CHECK(norm(moved[i]) == doctest::Approx(0.25));  // rad(I)/2 = 0.5 / 2
    CHECK(norm(cross(moved[i], pts[i])) <= 1e-9);    // on the segment to the center
    CHECK(dot(moved[i], pts[i]) > 0.0);
  }

  // The moved octahedron is the new innermost shell, the group is unchanged
  // and the first orbit is now breakable.
  const OrbitDecomposition after = gamma_decomposition(moved);
  CHECK(after.group.kind == GroupKind::Tetrahedral);
  CHECK(after.inner.radius == doctest::Approx(0.25));
  CHECK(after.orbits[0].size() == 6);
  CHECK(eval_conditions(moved).t1);
  CHECK_FALSE(eval_conditions(moved).t2);
}

TEST_CASE("prepare rejects configurations outside its phase") {
  CHECK_THROWS_WITH_AS(prepare(generate_polyhedron("dodecahedron"), 0), "wrong phase", Error);
  const std::vector<Point3> square{{1, 1, 0}, {1, -1, 0}, {-1, 1, 0}, {-1, -1, 0}};
  CHECK_THROWS_WITH_AS(prepare(square, 0), "wrong phase", Error);
  CHECK_THROWS_WITH_AS(prepare(generate_polyhedron("icosahedron"), 0), "unsolvable input",
                       Error);
}

TEST_CASE("incident faces of the regular solids") {
  const std::vector<Point3> cube = generate_polyhedron("cube");
  const auto cube_faces = incident_faces(cube, 0);
  REQUIRE(cube_faces.size() == 3);
  for (const FaceChoice& f : cube_faces) {
    CHECK(f.vertices.size() == 4);
    CHECK(std::count(f.vertices.begin(), f.vertices.end(), std::size_t{0}) == 1);
    // Face centers of the cube sit on the coordinate axes.
    const Vec3 c = f.center;
    int nonzero = 0;
    if (std::abs(c.x) > 1e-9) ++nonzero;
    if (std::abs(c.y) > 1e-9) ++nonzero;
    if (std::abs(c.z) > 1e-9) ++nonzero;
    CHECK(nonzero == 1);
  }

  CHECK(incident_faces(generate_polyhedron("tetrahedron"), 0).size() == 3);
  CHECK(incident_faces(generate_polyhedron("octahedron"), 0).size() == 4);
  CHECK(incident_faces(generate_polyhedron("dodecahedron"), 0).size() == 3);

  // Icosidodecahedron: only the two pentagon faces are selectable.
  const auto penta = incident_faces(generate_polyhedron("icosidodecahedron"), 0);
  REQUIRE(penta.size() == 2);
  for (const FaceChoice& f : penta) CHECK(f.vertices.size() == 5);
}

TEST_CASE("incident faces are empty off the innermost orbit") {
  std::vector<Point3> pts = generate_polyhedron("tetrahedron", 0.5);
  const std::vector<Point3> outer = generate_polyhedron("truncated_tetrahedron", 1.0);
  pts.insert(pts.end(), outer.begin(), outer.end());
  CHECK(incident_faces(pts, 10).empty());
  CHECK_FALSE(incident_faces(pts, 0).empty());
}

TEST_CASE("break symmetry stops a hundredth of an edge before the face center") {
  const std::vector<Point3> cube = generate_polyhedron("cube");
  const double edge = min_pairwise_distance(cube);
  const auto faces = incident_faces(cube, 0);
  const Point3 d = break_symmetry(cube, 0, faces[0]);
  CHECK(distance(d, faces[0].center) == doctest::Approx(edge / 100.0));
  CHECK(norm(cross(d - faces[0].center, cube[0] - faces[0].center)) <= 1e-9);
  CHECK(dot(d - faces[0].center, cube[0] - faces[0].center) > 0.0);

  // The default overload picks the lexicographically smallest centroid,
  // which is the first of the sorted incident faces.
  CHECK(distance(break_symmetry(cube, 0), d) <= 1e-12);
}

TEST_CASE("breaking every cube robot yields a 2D group") {
  const std::vector<Point3> cube = generate_polyhedron("cube");
  std::vector<Point3> after;
  for (std::size_t i = 0; i < cube.size(); ++i) after.push_back(break_symmetry(cube, i));
  CHECK(all_distinct(after));
  const GroupClass g = analyze_symmetry(after).group;
  CHECK_FALSE(g.is_3d());
}

TEST_CASE("break symmetry rejects wrong phases and foreign faces") {
  CHECK_THROWS_WITH_AS(break_symmetry(generate_polyhedron("icosahedron"), 0), "wrong phase",
                       Error);
  CHECK_THROWS_WITH_AS(break_symmetry(generate_polyhedron("prism(5)"), 0), "wrong phase",
                       Error);

  const std::vector<Point3> cube = generate_polyhedron("cube");
  std::size_t opposite = 0;
  for (std::size_t i = 1; i < cube.size(); ++i)
    if (distance(cube[i], cube[0]) > distance(cube[opposite], cube[0])) opposite = i;
  const auto foreign = incident_faces(cube, opposite);
  CHECK_THROWS_WITH_AS(break_symmetry(cube, 0, foreign[0]), "face not incident", Error);
}

TEST_CASE("the destination set degenerates for the magic epsilon and not for ours") {
  // Unit cube. With eps = 1 - 1/sqrt(2) the 24 candidate destinations form a
  // rhombicuboctahedron (every candidate has exactly four nearest neighbours
  // at the common edge length); with the shipped eps = edge/100 they huddle
  // around the six face centers, the vertices of the dual octahedron.
  std::vector<Point3> cube;
  for (double x : {-0.5, 0.5})
    for (double y : {-0.5, 0.5})
      for (double z : {-0.5, 0.5}) cube.push_back({x, y, z});

  const double bad_eps = 1.0 - 1.0 / std::sqrt(2.0);
  std::vector<Point3> bad;
  std::vector<Point3> shipped;
  for (std::size_t i = 0; i < cube.size(); ++i) {
    for (const FaceChoice& f : incident_faces(cube, i)) {
      bad.push_back(f.center + bad_eps * normalized(cube[i] - f.center));
      shipped.push_back(break_symmetry(cube, i, f));
    }
  }
  REQUIRE(bad.size() == 24);

  const double r0 = norm(bad[0]);
  for (const Point3& p : bad) CHECK(norm(p) == doctest::Approx(r0));
  const double edge = min_pairwise_distance(bad);
  for (const Point3& p : bad) {
    int neighbours = 0;
    for (const Point3& q : bad) {
      const double d = distance(p, q);
      if (d > 1e-9 && d <= edge + 1e-9) ++neighbours;
    }
    CHECK(neighbours == 4);
  }

  for (const Point3& p : shipped) {
    double nearest_center = std::numeric_limits<double>::max();
    for (const Vec3 axis : {Vec3{0.5, 0, 0}, Vec3{0, 0.5, 0}, Vec3{0, 0, 0.5}}) {
      nearest_center = std::min(nearest_center, distance(p, axis));
      nearest_center = std::min(nearest_center, distance(p, -1.0 * axis));
    }
    CHECK(nearest_center <= 0.011);
  }
}

TEST_CASE("select plane is perpendicular to the single or principal axis") {
  const std::vector<Point3> prism = generate_polyhedron("prism(5)");
  const Plane f = select_plane(prism);
  CHECK(std::abs(f.normal.z) == doctest::Approx(1.0));
  CHECK(std::abs(f.offset) <= 1e-9);

  // Skew-line pair: two short segments on perpendicular skew lines; the
  // common perpendicular is the z axis through the midpoint.
  const double delta = 0.01;
  const std::vector<Point3> skew{
      {delta, 0, 0.5}, {-delta, 0, 0.5}, {0, delta, -0.5}, {0, -delta, -0.5}};
  const GroupClass g = analyze_symmetry(skew).group;
  CHECK(g.kind == GroupKind::Dihedral);
  CHECK(g.degree == 2);
  const Plane fs = select_plane(skew);
  CHECK(std::abs(fs.normal.z) == doctest::Approx(1.0));
  CHECK(std::abs(fs.offset) <= 1e-9);
}

TEST_CASE("select plane for a trivial group passes through the anchor robots") {
  std::mt19937_64 rng(31);
  std::vector<Point3> pts;
  for (int i = 0; i < 5; ++i) pts.push_back(oracle::random_point(rng));
  REQUIRE(analyze_symmetry(pts).group.order == 1);
  const OrbitDecomposition dec = gamma_decomposition(pts);
  const std::size_t anchor = dec.orbits[0][0];
  const std::size_t meridian = local_view(pts, anchor).meridian;
  const Point3 b = dec.outer.center;

  const Plane f = select_plane(pts);
  CHECK(std::abs(f.signed_distance(pts[anchor])) <= 1e-9);
  CHECK(std::abs(f.signed_distance(pts[meridian])) <= 1e-9);
  CHECK(std::abs(f.signed_distance(b)) <= 1e-9);
}

TEST_CASE("select plane rejects planar and 3D inputs") {
  const std::vector<Point3> square{{1, 1, 0}, {1, -1, 0}, {-1, 1, 0}, {-1, -1, 0}};
  CHECK_THROWS_WITH_AS(select_plane(square), "already planar", Error);
  CHECK_THROWS_WITH_AS(select_plane(generate_polyhedron("dodecahedron")), "wrong phase", Error);
}

TEST_CASE("landing keeps robots already on the plane in place") {
  const std::vector<Point3> pyramid = generate_polyhedron("pyramid(4)");
  std::vector<Point3> landed;
  for (std::size_t i = 0; i < pyramid.size(); ++i) landed.push_back(land(pyramid, i));
  CHECK(coplanar(landed));
  CHECK(all_distinct(landed));
  REQUIRE_FALSE(collinear(landed));

  // A second pass over the landed configuration must not move anybody.
  const Plane f = select_plane(pyramid);
  for (std::size_t i = 0; i < landed.size(); ++i) {
    CHECK(std::abs(f.signed_distance(landed[i])) <= 1e-9);
    CHECK(distance(select_destination(landed, f, i), landed[i]) <= 1e-12);
  }
}

TEST_CASE("stacked prism pairs perturb onto distinct quarter circles") {
  const std::vector<Point3> prism = generate_polyhedron("prism(5)");
  const Plane f = select_plane(prism);
  std::vector<Point3> landed;
  for (std::size_t i = 0; i < prism.size(); ++i)
    landed.push_back(select_destination(prism, f, i));

  CHECK(all_distinct(landed));
  for (const Point3& p : landed) CHECK(std::abs(f.signed_distance(p)) <= 1e-9);

  // Every vertical pair shares a foot; both members land at r/4 from it.
  for (std::size_t i = 0; i < 5; ++i) {
    const Point3 foot = f.project(prism[i]);
    std::size_t partner = prism.size();
    for (std::size_t j = 0; j < prism.size(); ++j)
      if (j != i && distance(f.project(prism[j]), foot) <= 1e-9) partner = j;
    REQUIRE(partner < prism.size());
    const double ri = distance(landed[i], foot);
    const double rj = distance(landed[partner], foot);
    CHECK(ri == doctest::Approx(rj));
    CHECK(ri > 1e-6);
    CHECK(distance(landed[i], landed[partner]) > 1e-6);
  }
}

TEST_CASE("double pyramid apexes land on concentric circles at the offset angle") {
  const std::vector<Point3> pts = double_pyramid();
  REQUIRE(analyze_symmetry(pts).group.kind == GroupKind::Cyclic);
  REQUIRE(analyze_symmetry(pts).group.degree == 4);

  const Plane f = select_plane(pts);
  CHECK(std::abs(f.normal.z) == doctest::Approx(1.0));
  std::vector<Point3> landed;
  for (std::size_t i = 0; i < pts.size(); ++i) landed.push_back(select_destination(pts, f, i));

  CHECK(all_distinct(landed));
  for (const Point3& p : landed) CHECK(std::abs(f.signed_distance(p)) <= 1e-9);
  CHECK_FALSE(collinear(landed));

  const Point3 b = smallest_enclosing_ball(pts).center;
  for (std::size_t i = 0; i < 4; ++i) CHECK(distance(landed[i], f.project(pts[i])) <= 1e-9);

  // Both apex feet are the center and both apexes touch the enclosing
  // sphere, so they share one height level: a quarter circle of the ring
  // clearance (1.2) each.
  for (std::size_t i = 4; i < 6; ++i)
    CHECK(distance(landed[i], b) == doctest::Approx(0.3).epsilon(1e-9));

  // Landing angles sit 2 pi / 16 away from the ring directions (the
  // projected regular-polygon vertices of Q(P) for |gamma| = 4), on the side
  // matching the apex: one at pi/8 and one at 3 pi/8 modulo a quarter turn.
  std::set<int> classes;
  for (std::size_t i = 4; i < 6; ++i) {
    const Vec3 rel = landed[i] - b;
    const double angle = std::atan2(rel.y, rel.x);
    const double frac = std::fmod(std::fmod(angle, kPi / 2.0) + kPi / 2.0, kPi / 2.0);
    if (std::abs(frac - kPi / 8.0) <= 1e-9) classes.insert(1);
    if (std::abs(frac - 3.0 * kPi / 8.0) <= 1e-9) classes.insert(3);
  }
  CHECK(classes == std::set<int>{1, 3});
}

TEST_CASE("sphenoid landing forms a rectangle") {
  const std::vector<Point3> pts = generate_polyhedron("sphenoid");
  std::vector<Point3> landed;
  for (std::size_t i = 0; i < pts.size(); ++i) landed.push_back(land(pts, i));
  CHECK(coplanar(landed));
  CHECK(all_distinct(landed));
  CHECK_FALSE(collinear(landed));

  // Distinct feet land directly; the four projections form a rectangle:
  // diagonals of equal length meeting at a common midpoint.
  const Point3 m = 0.25 * (landed[0] + landed[1] + landed[2] + landed[3]);
  const double d0 = distance(landed[0], m);
  for (const Point3& p : landed) CHECK(distance(p, m) == doctest::Approx(d0));
}

TEST_CASE("select destination validates the observer index") {
  const std::vector<Point3> pts = double_pyramid();
  const Plane f = select_plane(pts);
  CHECK_THROWS_WITH_AS(select_destination(pts, f, 17), "observer index out of range", Error);
}

TEST_CASE("prepare break and land are equivariant under frame changes") {
  std::mt19937_64 rng(47);
  for (int trial = 0; trial < 3; ++trial) {
    const Mat3 r = random_rotation(rng);
    const double s = random_scale(rng);
    const Vec3 t = oracle::random_point(rng, 2.0);
    const auto zmap = [&](const Point3& p) { return s * (r * p) + t; };

    const std::vector<Point3> prep = three_shell_composite();
    std::vector<Point3> prep_moved;
    for (const Point3& p : prep) prep_moved.push_back(zmap(p));
    for (std::size_t i : {std::size_t{0}, std::size_t{36}, std::size_t{41}})
      CHECK(distance(prepare(prep_moved, i), zmap(prepare(prep, i))) <= 1e-7 * s);

    const std::vector<Point3> cube = generate_polyhedron("cube");
    std::vector<Point3> cube_moved;
    for (const Point3& p : cube) cube_moved.push_back(zmap(p));
    const FaceChoice face = incident_faces(cube, 0)[1];
    FaceChoice face_moved = face;
    face_moved.center = zmap(face.center);
    CHECK(distance(break_symmetry(cube_moved, 0, face_moved),
                   zmap(break_symmetry(cube, 0, face))) <= 1e-7 * s);

    // Landing without center feet is fully equivariant, choices included.
    const std::vector<Point3> sph = generate_polyhedron("sphenoid");
    std::vector<Point3> sph_moved;
    for (const Point3& p : sph) sph_moved.push_back(zmap(p));
    for (std::size_t i = 0; i < sph.size(); ++i)
      CHECK(distance(land(sph_moved, i), zmap(land(sph, i))) <= 1e-7 * s);
  }
}

TEST_CASE("regular polyhedron recognition accepts exactly the five solids") {
  std::mt19937_64 rng(53);
  for (const char* name :
       {"tetrahedron", "octahedron", "cube", "icosahedron", "dodecahedron"}) {
    const std::vector<Point3> base = generate_polyhedron(name);
    CHECK(is_regular_polyhedron(base));
    const Mat3 r = random_rotation(rng);
    std::vector<Point3> moved;
    for (const Point3& p : base) moved.push_back(2.5 * (r * p) + Vec3{1, -2, 0.5});
    CHECK(is_regular_polyhedron(moved));
  }
  CHECK_FALSE(is_regular_polyhedron(generate_polyhedron("cuboctahedron")));  // also 12 points
  CHECK_FALSE(is_regular_polyhedron(generate_polyhedron("prism(4)")));       // also 8 points
  CHECK_FALSE(is_regular_polyhedron(generate_polyhedron("pyramid(3)")));
  const std::vector<Point3> square{{1, 1, 0}, {1, -1, 0}, {-1, 1, 0}, {-1, -1, 0}};
  CHECK_FALSE(is_regular_polyhedron(square));
}

TEST_CASE("incident edges connect each vertex to its nearest ring") {
  CHECK(incident_edges(generate_polyhedron("tetrahedron"), 0).size() == 3);
  CHECK(incident_edges(generate_polyhedron("cube"), 0).size() == 3);
  CHECK(incident_edges(generate_polyhedron("octahedron"), 0).size() == 4);
  CHECK(incident_edges(generate_polyhedron("icosahedron"), 0).size() == 5);
  CHECK_THROWS_WITH_AS(incident_edges(generate_polyhedron("cuboctahedron"), 0),
                       "non-polyhedral input", Error);
}

TEST_CASE("go to midpoint walks the chosen edge and stops short") {
  const std::vector<Point3> tet = generate_polyhedron("tetrahedron");
  const double edge = min_pairwise_distance(tet);
  const Point3 d = go_to_midpoint(tet, 0, 1);
  const Point3 mid = 0.5 * (tet[0] + tet[1]);
  CHECK(distance(d, mid) == doctest::Approx(edge / 100.0));
  CHECK(norm(cross(d - mid, tet[0] - mid)) <= 1e-9);
  CHECK(dot(d - mid, tet[0] - mid) > 0.0);

  std::size_t opposite = 0;
  const std::vector<Point3> cube = generate_polyhedron("cube");
  for (std::size_t i = 1; i < cube.size(); ++i)
    if (distance(cube[i], cube[0]) > distance(cube[opposite], cube[0])) opposite = i;
  CHECK_THROWS_WITH_AS(go_to_midpoint(cube, 0, opposite), "edge not incident", Error);
  CHECK_THROWS_WITH_AS(go_to_midpoint(generate_polyhedron("cuboctahedron"), 0),
                       "non-polyhedral input", Error);
}

TEST_CASE("opposite-edge choices on the tetrahedron leave short skew segments") {
  const std::vector<Point3> tet = generate_polyhedron("tetrahedron");
  const double eps = min_pairwise_distance(tet) / 100.0;
  // Robots 0 and 1 walk edge (0,1); robots 2 and 3 walk the opposite edge.
  const std::vector<Point3> after{go_to_midpoint(tet, 0, 1), go_to_midpoint(tet, 1, 0),
                                  go_to_midpoint(tet, 2, 3), go_to_midpoint(tet, 3, 2)};
  CHECK(distance(after[0], after[1]) == doctest::Approx(2.0 * eps));
  CHECK(distance(after[2], after[3]) == doctest::Approx(2.0 * eps));
  const GroupClass g = analyze_symmetry(after).group;
  CHECK_FALSE(g.is_3d());
  // The two segments lie on the original skew edge lines.
  CHECK(norm(cross(after[0] - after[1], tet[0] - tet[1])) <= 1e-9);
  CHECK(norm(cross(after[2] - after[3], tet[2] - tet[3])) <= 1e-9);
}

TEST_CASE("the full dispatch stays on planar input and breaks the dodecahedron") {
  const std::vector<Point3> square{{1, 1, 0}, {1, -1, 0}, {-1, 1, 0}, {-1, -1, 0}};
  for (std::size_t i = 0; i < square.size(); ++i)
    CHECK(distance(plane_formation_step(square, i), square[i]) <= 1e-12);

  const std::vector<Point3> dodeca = generate_polyhedron("dodecahedron");
  const double eps = min_pairwise_distance(dodeca) / 100.0;
  const Point3 d = plane_formation_step(dodeca, 0);
  CHECK(distance(d, break_symmetry(dodeca, 0)) <= 1e-12);
  const auto faces = incident_faces(dodeca, 0);
  double to_center = std::numeric_limits<double>::max();
  for (const FaceChoice& f : faces) to_center = std::min(to_center, distance(d, f.center));
  CHECK(to_center == doctest::Approx(eps));
}

TEST_CASE("the dispatch guards unsolvable input unless asked not to") {
  const std::vector<Point3> icosa = generate_polyhedron("icosahedron");
  CHECK_THROWS_WITH_AS(plane_formation_step(icosa, 0), "unsolvable input", Error);
  CHECK(distance(plane_formation_step(icosa, 0, Tolerance{}, false), icosa[0]) <= 1e-12);
}

TEST_CASE("a robot on the ball center leaves first while the rest wait") {
  std::vector<Point3> pts = generate_polyhedron("cube");
  pts.push_back({0, 0, 0});
  const Point3 d = plane_formation_step(pts, 8);
  CHECK(norm(d) == doctest::Approx(0.5));  // circumradius of the punctured set, halved
  CHECK(d.y == doctest::Approx(0.0));
  CHECK(d.z == doctest::Approx(0.0));
  for (std::size_t i = 0; i < 8; ++i)
    CHECK(distance(plane_formation_step(pts, i), pts[i]) <= 1e-12);
}

TEST_CASE("tiny inputs hold position and bad indices are rejected") {
  const std::vector<Point3> three{{0, 0, 0}, {1, 0, 0}, {0, 1, 5}};
  for (std::size_t i = 0; i < three.size(); ++i)
    CHECK(distance(plane_formation_step(three, i), three[i]) <= 1e-12);
  CHECK_THROWS_WITH_AS(plane_formation_step(three, 7), "observer index out of range", Error);

  std::vector<Point3> dup = generate_polyhedron("cube");
  dup.push_back(dup[0]);
  CHECK_THROWS_WITH_AS(plane_formation_step(dup, 0), "point multiplicity", Error);
}

TEST_SUITE_END();
