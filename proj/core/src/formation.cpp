#include "planeform/formation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numbers>
#include <optional>
#include <set>

#include "planeform/decomposition.hpp"
#include "planeform/error.hpp"
#include "planeform/symmetry.hpp"

namespace planeform {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kStopDivisor = 100.0;  // walk-toward moves stop edge/100 short

bool breakable_size(std::size_t n) { return n != 12 && n != 24 && n != 60; }

struct Ctx {
  OrbitDecomposition dec;
  double eps;
};

Ctx make_ctx(std::span<const Point3> points, const Tolerance& tol) {
  Ctx c{gamma_decomposition(points, tol), 0.0};
  c.eps = tol.eps(c.dec.outer.radius);
  return c;
}

// ---------------------------------------------------------------------------
// prepare

Point3 prepare_move(const Ctx& c, std::span<const Point3> points, std::size_t self) {
  if (!c.dec.group.is_3d() || breakable_size(c.dec.orbits[0].size()))
    throw Error("wrong phase");

  std::optional<std::size_t> s;
  for (std::size_t k = 0; k < c.dec.orbits.size(); ++k) {
    if (breakable_size(c.dec.orbits[k].size())) {
      s = k;
      break;
    }
  }
  if (!s) throw Error("unsolvable input");

  const auto& orbit = c.dec.orbits[*s];
  if (std::find(orbit.begin(), orbit.end(), self) == orbit.end()) return points[self];

  const Point3 b = c.dec.outer.center;
  return b + (c.dec.inner.radius / 2.0) * normalized(points[self] - b);
}

// ---------------------------------------------------------------------------
// symmetry breaking

// Faces of the convex polyhedron spanned by one orbit: for each vertex, every
// pair of its edge-neighbors spans a candidate plane, kept when it supports
// the whole orbit (no points on both sides).
struct OrbitFaces {
  std::vector<std::vector<std::size_t>> faces;  // sorted global indices
  double edge = 0.0;
};

OrbitFaces orbit_faces(std::span<const Point3> points, const std::vector<std::size_t>& orbit,
                       double eps, bool pentagons_only) {
  OrbitFaces out;
  out.edge = std::numeric_limits<double>::max();
  for (std::size_t a = 0; a < orbit.size(); ++a)
    for (std::size_t b = a + 1; b < orbit.size(); ++b)
      out.edge = std::min(out.edge, distance(points[orbit[a]], points[orbit[b]]));

  std::vector<std::vector<std::size_t>> neighbors(orbit.size());
  for (std::size_t a = 0; a < orbit.size(); ++a) {
    for (std::size_t b = 0; b < orbit.size(); ++b) {
      if (a != b && std::abs(distance(points[orbit[a]], points[orbit[b]]) - out.edge) <= eps)
        neighbors[a].push_back(b);
    }
  }

  std::set<std::vector<std::size_t>> seen;
  for (std::size_t v = 0; v < orbit.size(); ++v) {
    const Point3 pv = points[orbit[v]];
    for (std::size_t i = 0; i < neighbors[v].size(); ++i) {
      for (std::size_t j = i + 1; j < neighbors[v].size(); ++j) {
        const Point3 pa = points[orbit[neighbors[v][i]]];
        const Point3 pb = points[orbit[neighbors[v][j]]];
        Vec3 n = cross(pa - pv, pb - pv);
        const double nn = norm(n);
        if (nn <= eps * out.edge) continue;
        n = n / nn;

        std::vector<std::size_t> face;
        bool pos = false, neg = false;
        for (std::size_t w = 0; w < orbit.size(); ++w) {
          const double d = dot(n, points[orbit[w]] - pv);
          if (std::abs(d) <= eps) {
            face.push_back(orbit[w]);
          } else {
            (d > 0 ? pos : neg) = true;
          }
        }
        if (pos && neg) continue;
        if (pentagons_only && face.size() != 5) continue;
        std::sort(face.begin(), face.end());
        if (seen.insert(face).second) out.faces.push_back(std::move(face));
      }
    }
  }
  return out;
}

void require_break_phase(const Ctx& c) {
  if (!c.dec.group.is_3d() || !breakable_size(c.dec.orbits[0].size()))
    throw Error("wrong phase");
  const std::size_t n1 = c.dec.orbits[0].size();
  if (n1 != 4 && n1 != 6 && n1 != 8 && n1 != 20 && n1 != 30)
    throw Error("unbreakable orbit");
}

std::vector<FaceChoice> incident_faces_impl(const Ctx& c, std::span<const Point3> points,
                                            std::size_t self) {
  require_break_phase(c);
  const auto& orbit = c.dec.orbits[0];
  if (std::find(orbit.begin(), orbit.end(), self) == orbit.end()) return {};

  const OrbitFaces of = orbit_faces(points, orbit, c.eps, orbit.size() == 30);
  std::vector<FaceChoice> out;
  for (const auto& face : of.faces) {
    if (std::find(face.begin(), face.end(), self) == face.end()) continue;
    FaceChoice fc;
    fc.vertices = face;
    fc.center = Vec3{0, 0, 0};
    for (std::size_t i : face) fc.center = fc.center + points[i];
    fc.center = fc.center / static_cast<double>(face.size());
    out.push_back(std::move(fc));
  }
  std::sort(out.begin(), out.end(),
            [](const FaceChoice& a, const FaceChoice& b) { return lex_less(a.center, b.center); });
  return out;
}

Point3 break_move(const Ctx& c, std::span<const Point3> points, std::size_t self,
                  const FaceChoice* choice) {
  require_break_phase(c);
  const auto& orbit = c.dec.orbits[0];
  if (std::find(orbit.begin(), orbit.end(), self) == orbit.end()) return points[self];

  const std::vector<FaceChoice> faces = incident_faces_impl(c, points, self);
  if (faces.empty()) throw Error("unbreakable orbit");

  const FaceChoice* pick = nullptr;
  if (choice) {
    std::vector<std::size_t> want = choice->vertices;
    std::sort(want.begin(), want.end());
    for (const FaceChoice& f : faces) {
      if (f.vertices == want) {
        pick = &f;
        break;
      }
    }
    if (!pick) throw Error("face not incident");
  } else {
    pick = &faces.front();  // lexicographically smallest centroid in local coordinates
  }

  double edge = std::numeric_limits<double>::max();
  for (std::size_t a = 0; a < orbit.size(); ++a)
    for (std::size_t b = a + 1; b < orbit.size(); ++b)
      edge = std::min(edge, distance(points[orbit[a]], points[orbit[b]]));

  const double epsilon = edge / kStopDivisor;
  return pick->center + epsilon * normalized(points[self] - pick->center);
}

// ---------------------------------------------------------------------------
// landing

Plane select_plane_impl(const Ctx& c, std::span<const Point3> points, const Tolerance& tol) {
  if (coplanar(points, tol)) throw Error("already planar");
  if (!c.dec.group.is_2d()) throw Error("wrong phase");

  const Point3 b = c.dec.outer.center;
  Vec3 normal;
  if (c.dec.group.order == 1) {
    const std::size_t star = c.dec.orbits[0].front();
    const LocalView view = local_view(points, star, tol);
    const Vec3 n = cross(points[view.meridian] - points[star], b - points[star]);
    if (norm(n) <= c.eps * c.dec.outer.radius)
      throw Error("tolerance failure: degenerate plane basis");
    normal = n;
  } else {
    if (!c.dec.group.principal) throw Error("tolerance failure: missing principal axis");
    normal = *c.dec.group.principal;
  }
  normal = canonical_axis(normalized(normal));
  return Plane{normal, dot(normal, b)};
}

// Vertex set Q(P) used when a foot coincides with the ball center: for a
// dihedral group the secondary axes cut the great circle of B(P) on F; for a
// cyclic group the outermost full orbit is projected onto F and pushed out to
// the boundary of B(P).
std::vector<Point3> q_vertices(const Ctx& c, std::span<const Point3> points, const Plane& F,
                               const Point3& bF) {
  const double R = c.dec.outer.radius;
  std::vector<Point3> out;
  if (c.dec.group.kind == GroupKind::Dihedral) {
    const Vec3 principal = *c.dec.group.principal;
    for (const AxisFold& af : c.dec.group.axes) {
      if (af.fold != 2 || std::abs(dot(af.direction, principal)) > 1e-6) continue;
      out.push_back(bF + R * af.direction);
      out.push_back(bF - R * af.direction);
    }
  } else {
    const std::size_t k = static_cast<std::size_t>(c.dec.group.order);
    std::size_t last = SIZE_MAX;
    for (std::size_t i = 0; i < c.dec.orbits.size(); ++i)
      if (c.dec.orbits[i].size() == k) last = i;
    if (last == SIZE_MAX) throw Error("tolerance failure: no full orbit for Q(P)");
    for (std::size_t i : c.dec.orbits[last]) {
      const Vec3 w = F.project(points[i]) - bF;
      out.push_back(bF + R * normalized(w));
    }
  }
  return out;
}

Point3 select_destination_impl(const Ctx& c, std::span<const Point3> points, const Plane& plane,
                               std::size_t self) {
  const double nn = norm(plane.normal);
  if (nn <= 0.0) throw Error("degenerate plane");
  const Plane F{plane.normal / nn, plane.offset / nn};
  const double eps = c.eps;
  const Point3 b = c.dec.outer.center;
  const Point3 bF = F.project(b);
  const int g = c.dec.group.order;

  std::vector<Point3> resting;
  for (const Point3& p : points)
    if (std::abs(F.signed_distance(p)) <= eps) resting.push_back(p);

  // Feet of every robot in an orbit not yet wholly on F. Everything below is
  // a function of this set as a whole, never of enumeration order, so
  // observers whose decompositions list the orbits differently still act out
  // one consistent plan.
  struct Foot {
    Point3 at;
    double sd;
    std::size_t orbit;
  };
  std::vector<Foot> feet;
  std::ptrdiff_t mine = -1;
  for (std::size_t k = 0; k < c.dec.orbits.size(); ++k) {
    const auto& orbit = c.dec.orbits[k];
    bool all_on = true;
    for (std::size_t i : orbit)
      if (std::abs(F.signed_distance(points[i])) > eps) all_on = false;
    if (all_on) {
      if (std::find(orbit.begin(), orbit.end(), self) != orbit.end()) return points[self];
      continue;
    }
    for (std::size_t i : orbit) {
      if (i == self) mine = static_cast<std::ptrdiff_t>(feet.size());
      feet.push_back({F.project(points[i]), F.signed_distance(points[i]), k});
    }
  }
  if (mine < 0) throw Error("observer index out of range");
  const Foot own = feet[static_cast<std::size_t>(mine)];

  // An orbit lands directly on its feet unless one of them hits the ball
  // center, another robot's foot, or a point already resting on F.
  bool contested = false;
  for (std::size_t i = 0; i < feet.size() && !contested; ++i) {
    if (feet[i].orbit != own.orbit) continue;
    if (distance(feet[i].at, bF) <= eps) contested = true;
    for (std::size_t j = 0; j < feet.size() && !contested; ++j)
      if (j != i && distance(feet[i].at, feet[j].at) <= eps) contested = true;
    for (const Point3& d : resting)
      if (distance(feet[i].at, d) <= eps) contested = true;
  }
  if (!contested) return own.at;

  // Clearance radius shared by the whole plan: distance from any foot to the
  // nearest non-coincident foot or resting point. Circles of radius r/4 and
  // below around distinct feet can then never meet.
  double r = std::numeric_limits<double>::max();
  for (const Foot& f : feet) {
    for (const Foot& h : feet) {
      const double del = distance(f.at, h.at);
      if (del > eps) r = std::min(r, del);
    }
    for (const Point3& d : resting) {
      const double del = distance(f.at, d);
      if (del > eps) r = std::min(r, del);
    }
  }
  if (r == std::numeric_limits<double>::max()) r = c.dec.outer.radius;
  if (r <= 4.0 * eps) throw Error("tolerance failure: degenerate landing circle");

  // Robots sharing a foot ring it on circles shrunk fourfold per level, one
  // level per distinct height above F. Equal heights only occur for partners
  // on opposite sides, which the side-dependent angle below keeps apart.
  std::vector<double> heights;
  for (const Foot& f : feet)
    if (distance(f.at, own.at) <= eps) heights.push_back(std::abs(f.sd));
  std::sort(heights.begin(), heights.end(), [](double a, double x) { return a > x; });
  std::vector<double> groups;
  for (double hgt : heights)
    if (groups.empty() || groups.back() - hgt > eps) groups.push_back(hgt);
  int level = 0;
  while (level + 1 < static_cast<int>(groups.size()) &&
         groups[static_cast<std::size_t>(level)] - std::abs(own.sd) > eps)
    ++level;
  const double rad = std::ldexp(r / 4.0, -2 * level);
  if (rad <= eps) throw Error("tolerance failure: degenerate landing circle");

  const double side = own.sd > 0 ? 1.0 : -1.0;
  if (distance(own.at, bF) <= eps) {
    if (g == 1) {
      // Frame-dependent direction: a trivial group offers no invariant angle
      // rule, and no other robot shares this circle.
      Vec3 u = Vec3{1, 0, 0} - dot(Vec3{1, 0, 0}, F.normal) * F.normal;
      if (norm(u) <= 1e-9) u = Vec3{0, 1, 0} - dot(Vec3{0, 1, 0}, F.normal) * F.normal;
      return bF + rad * normalized(u);
    }
    const std::vector<Point3> qset = q_vertices(c, points, F, bF);
    const Point3* v = &qset.front();
    for (const Point3& cand : qset)
      if (lex_less(cand, *v)) v = &cand;
    const Mat3 rot = Mat3::axis_angle(F.normal, -side * kPi / (2.0 * g));
    return bF + rad * (rot * normalized(*v - bF));
  }
  const Vec3 u = normalized(bF - own.at);
  const Mat3 rot = Mat3::axis_angle(F.normal, -side * kPi / 2.0);
  return own.at + rad * (rot * u);
}

// ---------------------------------------------------------------------------
// regular polyhedra and the midpoint demonstration

struct PlatonicShape {
  int degree;
  GroupKind kind;
};

const std::map<std::size_t, PlatonicShape>& platonic_table() {
  static const std::map<std::size_t, PlatonicShape> table{
      {4, {3, GroupKind::Tetrahedral}},  {6, {4, GroupKind::Octahedral}},
      {8, {3, GroupKind::Octahedral}},   {12, {5, GroupKind::Icosahedral}},
      {20, {3, GroupKind::Icosahedral}},
  };
  return table;
}

double min_pair_distance(std::span<const Point3> points) {
  double best = std::numeric_limits<double>::max();
  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t j = i + 1; j < points.size(); ++j)
      best = std::min(best, distance(points[i], points[j]));
  return best;
}

}  // namespace

Conditions eval_conditions(std::span<const Point3> points, const Tolerance& tol) {
  if (!all_distinct(points, tol)) throw Error("point multiplicity");
  if (coplanar(points, tol)) return Conditions{true, true, true};

  const OrbitDecomposition dec = gamma_decomposition(points, tol);
  if (dec.group.is_2d()) return Conditions{true, true, false};
  return Conditions{breakable_size(dec.orbits[0].size()), false, false};
}

Point3 prepare(std::span<const Point3> points, std::size_t self, const Tolerance& tol) {
  if (self >= points.size()) throw Error("observer index out of range");
  if (coplanar(points, tol)) throw Error("wrong phase");
  const Ctx c = make_ctx(points, tol);
  return prepare_move(c, points, self);
}

std::vector<FaceChoice> incident_faces(std::span<const Point3> points, std::size_t self,
                                       const Tolerance& tol) {
  if (self >= points.size()) throw Error("observer index out of range");
  if (coplanar(points, tol)) throw Error("wrong phase");
  const Ctx c = make_ctx(points, tol);
  return incident_faces_impl(c, points, self);
}

Point3 break_symmetry(std::span<const Point3> points, std::size_t self, const Tolerance& tol) {
  if (self >= points.size()) throw Error("observer index out of range");
  if (coplanar(points, tol)) throw Error("wrong phase");
  const Ctx c = make_ctx(points, tol);
  return break_move(c, points, self, nullptr);
}

Point3 break_symmetry(std::span<const Point3> points, std::size_t self, const FaceChoice& choice,
                      const Tolerance& tol) {
  if (self >= points.size()) throw Error("observer index out of range");
  if (coplanar(points, tol)) throw Error("wrong phase");
  const Ctx c = make_ctx(points, tol);
  return break_move(c, points, self, &choice);
}

Plane select_plane(std::span<const Point3> points, const Tolerance& tol) {
  if (coplanar(points, tol)) throw Error("already planar");
  const Ctx c = make_ctx(points, tol);
  return select_plane_impl(c, points, tol);
}

Point3 select_destination(std::span<const Point3> points, const Plane& plane, std::size_t self,
                          const Tolerance& tol) {
  if (self >= points.size()) throw Error("observer index out of range");
  const Ctx c = make_ctx(points, tol);
  return select_destination_impl(c, points, plane, self);
}

Point3 land(std::span<const Point3> points, std::size_t self, const Tolerance& tol) {
  if (self >= points.size()) throw Error("observer index out of range");
  if (coplanar(points, tol)) throw Error("already planar");
  const Ctx c = make_ctx(points, tol);
  const Plane F = select_plane_impl(c, points, tol);
  return select_destination_impl(c, points, F, self);
}

bool is_regular_polyhedron(std::span<const Point3> points, const Tolerance& tol) {
  const auto it = platonic_table().find(points.size());
  if (it == platonic_table().end()) return false;
  if (!all_distinct(points, tol)) return false;
  if (coplanar(points, tol)) return false;

  const Ball bound = smallest_enclosing_ball(points);
  const double eps = tol.eps(bound.radius);
  for (const Point3& p : points)
    if (std::abs(distance(p, bound.center) - bound.radius) > eps) return false;

  const double edge = min_pair_distance(points);
  for (std::size_t i = 0; i < points.size(); ++i) {
    int deg = 0;
    for (std::size_t j = 0; j < points.size(); ++j)
      if (j != i && std::abs(distance(points[i], points[j]) - edge) <= eps) ++deg;
    if (deg != it->second.degree) return false;
  }

  try {
    return analyze_symmetry(points, tol).group.kind == it->second.kind;
  } catch (const Error&) {
    return false;
  }
}

std::vector<std::size_t> incident_edges(std::span<const Point3> points, std::size_t self,
                                        const Tolerance& tol) {
  if (self >= points.size()) throw Error("observer index out of range");
  if (!is_regular_polyhedron(points, tol)) throw Error("non-polyhedral input");
  const double eps = tol.eps(smallest_enclosing_ball(points).radius);
  const double edge = min_pair_distance(points);
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < points.size(); ++j)
    if (j != self && std::abs(distance(points[self], points[j]) - edge) <= eps) out.push_back(j);
  return out;
}

Point3 go_to_midpoint(std::span<const Point3> points, std::size_t self, const Tolerance& tol) {
  const std::vector<std::size_t> edges = incident_edges(points, self, tol);
  std::size_t pick = edges.front();
  Point3 best = 0.5 * (points[self] + points[pick]);
  for (std::size_t j : edges) {
    const Point3 mid = 0.5 * (points[self] + points[j]);
    if (lex_less(mid, best)) {
      best = mid;
      pick = j;
    }
  }
  return go_to_midpoint(points, self, pick, tol);
}

Point3 go_to_midpoint(std::span<const Point3> points, std::size_t self, std::size_t neighbor,
                      const Tolerance& tol) {
  if (self >= points.size() || neighbor >= points.size() || neighbor == self)
    throw Error("observer index out of range");
  if (!is_regular_polyhedron(points, tol)) throw Error("non-polyhedral input");
  const double eps = tol.eps(smallest_enclosing_ball(points).radius);
  const double edge = min_pair_distance(points);
  if (std::abs(distance(points[self], points[neighbor]) - edge) > eps)
    throw Error("edge not incident");

  const Point3 mid = 0.5 * (points[self] + points[neighbor]);
  return mid + (edge / kStopDivisor) * normalized(points[self] - mid);
}

Point3 plane_formation_step(std::span<const Point3> points, std::size_t self,
                            const Tolerance& tol, bool guard_unsolvable) {
  if (self >= points.size()) throw Error("observer index out of range");
  if (!all_distinct(points, tol)) throw Error("point multiplicity");
  if (points.size() <= 3 || coplanar(points, tol)) return points[self];

  const Ball bound = smallest_enclosing_ball(points);
  const double eps = tol.eps(bound.radius);

  // Pre-phase: a robot on the ball center leaves along its own +x axis to
  // half the punctured inner radius; everyone else waits for it to clear.
  if (distance(points[self], bound.center) <= eps) {
    std::vector<Point3> rest;
    rest.reserve(points.size() - 1);
    for (std::size_t i = 0; i < points.size(); ++i)
      if (i != self) rest.push_back(points[i]);
    const Ball inner = innermost_empty_ball(rest, points[self], tol);
    return points[self] + Vec3{inner.radius / 2.0, 0, 0};
  }
  for (std::size_t i = 0; i < points.size(); ++i)
    if (i != self && distance(points[i], bound.center) <= eps) return points[self];

  const Ctx c = make_ctx(points, tol);
  if (c.dec.group.is_3d()) {
    if (breakable_size(c.dec.orbits[0].size())) return break_move(c, points, self, nullptr);
    bool has_breakable = false;
    for (const auto& orbit : c.dec.orbits)
      if (breakable_size(orbit.size())) has_breakable = true;
    if (!has_breakable) {
      if (guard_unsolvable) throw Error("unsolvable input");
      return points[self];
    }
    return prepare_move(c, points, self);
  }

  const Plane F = select_plane_impl(c, points, tol);
  return select_destination_impl(c, points, F, self);
}

}  // namespace planeform
