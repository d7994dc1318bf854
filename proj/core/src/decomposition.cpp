#include "planeform/decomposition.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "point_index.hpp"

namespace planeform {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

int compare_triple(const ViewTriple& a, const ViewTriple& b, double eps) {
  if (std::abs(a.altitude - b.altitude) > eps) return a.altitude < b.altitude ? -1 : 1;
  if (std::abs(a.longitude - b.longitude) > eps) return a.longitude < b.longitude ? -1 : 1;
  if (std::abs(a.latitude - b.latitude) > eps) return a.latitude < b.latitude ? -1 : 1;
  return 0;
}

// Sorting key rounded to a grid well below the comparison tolerance but well
// above rounding noise, so copies of one view computed in different frames
// order true ties identically instead of by noise.
constexpr double kSortGrid = 1e-9;

double snap(double x) { return std::round(x / kSortGrid); }

bool triple_lex_less(const ViewTriple& a, const ViewTriple& b) {
  if (snap(a.altitude) != snap(b.altitude)) return snap(a.altitude) < snap(b.altitude);
  if (snap(a.longitude) != snap(b.longitude)) return snap(a.longitude) < snap(b.longitude);
  if (snap(a.latitude) != snap(b.latitude)) return snap(a.latitude) < snap(b.latitude);
  if (a.altitude != b.altitude) return a.altitude < b.altitude;
  if (a.longitude != b.longitude) return a.longitude < b.longitude;
  return a.latitude < b.latitude;
}

// Everything local_view needs about one candidate meridian, shared across
// candidates so the minimization does not redo the geometry.
struct ViewScaffold {
  std::size_t observer;
  std::vector<double> altitude;
  std::vector<double> latitude;
  std::vector<double> base_angle;  // longitude against a fixed reference
  std::vector<bool> off_axis;

  std::vector<ViewTriple> rest_for(std::size_t meridian, double eps) const {
    std::vector<ViewTriple> rest;
    rest.reserve(altitude.size() - 2);
    const double base_m = base_angle[meridian];
    for (std::size_t j = 0; j < altitude.size(); ++j) {
      if (j == observer || j == meridian) continue;
      double theta = 0.0;
      if (off_axis[j]) {
        theta = base_angle[j] - base_m;
        if (theta < 0.0) theta += kTwoPi;
        if (theta >= kTwoPi - eps) theta = 0.0;  // wraparound clamp
      }
      rest.push_back({altitude[j], theta, latitude[j]});
    }
    std::sort(rest.begin(), rest.end(), triple_lex_less);
    return rest;
  }
};

int compare_rest(const std::vector<ViewTriple>& a, const std::vector<ViewTriple>& b,
                 double eps) {
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (int c = compare_triple(a[i], b[i], eps)) return c;
  }
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  return 0;
}

}  // namespace

int compare(const LocalView& a, const LocalView& b, double eps) {
  const std::size_t n = std::min(a.triples.size(), b.triples.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (int c = compare_triple(a.triples[i], b.triples[i], eps)) return c;
  }
  if (a.triples.size() != b.triples.size()) return a.triples.size() < b.triples.size() ? -1 : 1;
  return 0;
}

LocalView local_view(std::span<const Point3> points, std::size_t observer,
                     const Tolerance& tol) {
  const std::size_t n = points.size();
  if (observer >= n) throw Error("observer index out of range");
  if (coplanar(points, tol)) throw Error("coplanar point set");

  const Ball bound = smallest_enclosing_ball(points);
  const double eps = tol.eps(bound.radius);

  std::vector<Vec3> q(n);
  std::vector<double> r(n);
  double r_min = std::numeric_limits<double>::max();
  for (std::size_t i = 0; i < n; ++i) {
    q[i] = points[i] - bound.center;
    r[i] = norm(q[i]);
    r_min = std::min(r_min, r[i]);
  }
  if (r_min <= eps) throw Error("center occupied");

  ViewScaffold s;
  s.observer = observer;
  s.altitude.resize(n);
  s.latitude.resize(n);
  s.base_angle.assign(n, 0.0);
  s.off_axis.resize(n);

  const bool single_shell = bound.radius - r_min <= eps;
  for (std::size_t i = 0; i < n; ++i) {
    s.altitude[i] = single_shell ? 1.0 : (r[i] - r_min) / (bound.radius - r_min);
  }

  const Vec3 u = q[observer] / r[observer];
  std::vector<Vec3> w(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double axial = dot(q[i], u);
    w[i] = q[i] - axial * u;
    const double wn = norm(w[i]);
    s.latitude[i] = std::atan2(wn, axial);
    s.off_axis[i] = wn > eps;
  }

  // Fixed in-plane reference; longitudes are later taken relative to the
  // meridian, so the reference choice cancels out.
  Vec3 e1{};
  for (std::size_t i = 0; i < n; ++i) {
    if (s.off_axis[i]) {
      e1 = normalized(w[i]);
      break;
    }
  }
  if (norm(e1) == 0.0) throw Error("coplanar point set");
  const Vec3 e2 = cross(u, e1);  // counter-clockwise seen from the observer's pole
  for (std::size_t i = 0; i < n; ++i) {
    if (!s.off_axis[i]) continue;
    double a = std::atan2(dot(w[i], e2), dot(w[i], e1));
    if (a < 0.0) a += kTwoPi;
    s.base_angle[i] = a;
  }

  // The observer is on its own axis, so it never competes as meridian.
  const double veps = tol.view_eps();
  double best_h = std::numeric_limits<double>::max();
  for (std::size_t i = 0; i < n; ++i)
    if (s.off_axis[i]) best_h = std::min(best_h, s.altitude[i]);
  double best_phi = std::numeric_limits<double>::max();
  for (std::size_t i = 0; i < n; ++i)
    if (s.off_axis[i] && s.altitude[i] <= best_h + veps)
      best_phi = std::min(best_phi, s.latitude[i]);
  std::vector<std::size_t> tied;
  for (std::size_t i = 0; i < n; ++i) {
    if (s.off_axis[i] && s.altitude[i] <= best_h + veps && s.latitude[i] <= best_phi + veps)
      tied.push_back(i);
  }

  // The views of two candidates agree on the first two triples (observer and
  // candidate pinned at (h, phi) within tolerance), so only the sorted rest
  // decides; generic sets have a single candidate and skip this entirely.
  std::size_t meridian = tied.front();
  std::vector<ViewTriple> best_rest = s.rest_for(meridian, veps);
  for (std::size_t k = 1; k < tied.size(); ++k) {
    std::vector<ViewTriple> rest = s.rest_for(tied[k], veps);
    if (compare_rest(rest, best_rest, veps) < 0) {
      meridian = tied[k];
      best_rest = std::move(rest);
    }
  }

  LocalView view;
  view.meridian = meridian;
  view.triples.reserve(n);
  view.triples.push_back({s.altitude[observer], 0.0, 0.0});
  view.triples.push_back({s.altitude[meridian], 0.0, s.latitude[meridian]});
  view.triples.insert(view.triples.end(), best_rest.begin(), best_rest.end());
  return view;
}

std::size_t OrbitDecomposition::orbit_containing(std::size_t point_index) const {
  for (std::size_t k = 0; k < orbits.size(); ++k) {
    for (std::size_t i : orbits[k])
      if (i == point_index) return k;
  }
  throw Error("point index not in any orbit");
}

OrbitDecomposition gamma_decomposition(std::span<const Point3> points, const Tolerance& tol) {
  if (!all_distinct(points, tol)) throw Error("point multiplicity");

  OrbitDecomposition dec;
  const SymmetryInfo info = analyze_symmetry(points, tol);
  if (info.group.kind == GroupKind::Collinear)
    throw Error("infinite rotation group (collinear)");
  dec.group = info.group;
  dec.rotations = info.rotations;
  dec.outer = info.bounding;

  const std::size_t n = points.size();
  const double eps = tol.eps(dec.outer.radius);
  std::vector<Vec3> q(n);
  double r_min = std::numeric_limits<double>::max();
  for (std::size_t i = 0; i < n; ++i) {
    q[i] = points[i] - dec.outer.center;
    r_min = std::min(r_min, norm(q[i]));
  }
  dec.center_occupied = r_min <= eps;
  dec.inner = Ball{dec.outer.center, dec.center_occupied ? 0.0 : r_min};

  detail::PointIndex index(q, eps);
  const int order = dec.group.order;

  std::vector<char> visited(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    if (visited[i]) continue;
    std::vector<std::size_t> orbit;
    int folding = 0;
    for (const RotationOp& g : dec.rotations) {
      const Point3 image = g.matrix * q[i];
      const auto hit = index.find(image);
      if (!hit) throw Error("tolerance failure in orbit structure");
      if (*hit == i) ++folding;
      if (!visited[*hit]) {
        visited[*hit] = 1;
        orbit.push_back(*hit);
      }
    }
    if (folding * static_cast<int>(orbit.size()) != order)
      throw Error("tolerance failure in orbit structure");
    std::sort(orbit.begin(), orbit.end(), [&](std::size_t a, std::size_t b) {
      return lex_less(points[a], points[b]);
    });
    dec.orbits.push_back(std::move(orbit));
    dec.foldings.push_back(folding);
  }

  const bool coplanar_flag = coplanar(points, tol);
  dec.ordered = !coplanar_flag && !dec.center_occupied;

  // Orbit order: radius first (an orbit lives on one shell). Ties resolve by
  // representative local views; when the center is occupied the views are
  // taken on the punctured set, which leaves the enclosing ball unchanged
  // because an interior point never supports it. Coplanar sets fall back to
  // the invariant distance fingerprint.
  const std::size_t m = dec.orbits.size();
  std::vector<double> orbit_radius(m);
  for (std::size_t k = 0; k < m; ++k)
    orbit_radius[k] = norm(q[dec.orbits[k].front()]);

  std::vector<Point3> punctured;
  std::vector<std::size_t> to_punctured(n, SIZE_MAX);
  if (dec.center_occupied && !coplanar_flag) {
    punctured.reserve(n - 1);
    for (std::size_t i = 0; i < n; ++i) {
      if (norm(q[i]) <= eps) continue;
      to_punctured[i] = punctured.size();
      punctured.push_back(points[i]);
    }
  }

  std::vector<std::optional<LocalView>> view_cache(m);
  auto view_of = [&](std::size_t k) -> const LocalView& {
    if (!view_cache[k]) {
      const std::size_t rep = dec.orbits[k].front();
      if (dec.center_occupied) {
        view_cache[k] = local_view(punctured, to_punctured[rep], tol);
      } else {
        view_cache[k] = local_view(points, rep, tol);
      }
    }
    return *view_cache[k];
  };

  std::vector<std::vector<double>> fp_cache(m);
  auto fingerprint_of = [&](std::size_t k) -> const std::vector<double>& {
    if (fp_cache[k].empty()) {
      const Point3 rep = points[dec.orbits[k].front()];
      std::vector<double> d;
      d.reserve(n);
      for (const Point3& p : points) d.push_back(distance(rep, p));
      std::sort(d.begin(), d.end());
      fp_cache[k] = std::move(d);
    }
    return fp_cache[k];
  };

  const double veps = tol.view_eps();
  auto less_orbits = [&](std::size_t a, std::size_t b) {
    if (std::abs(orbit_radius[a] - orbit_radius[b]) > eps)
      return orbit_radius[a] < orbit_radius[b];
    if (orbit_radius[a] <= eps || orbit_radius[b] <= eps)
      return orbit_radius[a] < orbit_radius[b];  // center singleton sorts first
    if (!coplanar_flag) {
      if (int c = compare(view_of(a), view_of(b), veps)) return c < 0;
    }
    const auto& fa = fingerprint_of(a);
    const auto& fb = fingerprint_of(b);
    for (std::size_t i = 0; i < fa.size(); ++i) {
      if (std::abs(fa[i] - fb[i]) > eps) return fa[i] < fb[i];
    }
    return false;  // indistinguishable; keep discovery order
  };

  std::vector<std::size_t> perm(m);
  for (std::size_t k = 0; k < m; ++k) perm[k] = k;
  // Insertion sort: the tolerant comparator is not a strict weak order in
  // adversarial cases, and m is tiny.
  for (std::size_t i = 1; i < m; ++i) {
    std::size_t j = i;
    while (j > 0 && less_orbits(perm[j], perm[j - 1])) {
      std::swap(perm[j], perm[j - 1]);
      --j;
    }
  }

  OrbitDecomposition sorted = dec;
  sorted.orbits.clear();
  sorted.foldings.clear();
  for (std::size_t k : perm) {
    sorted.orbits.push_back(dec.orbits[k]);
    sorted.foldings.push_back(dec.foldings[k]);
  }
  return sorted;
}

std::vector<Point3> orbit_of(const Point3& seed, std::span<const RotationOp> rotations,
                             const Point3& center, const Tolerance& tol) {
  const double eps = tol.eps(distance(seed, center));
  std::vector<Point3> out;
  for (const RotationOp& g : rotations) {
    const Point3 p = center + g.matrix * (seed - center);
    bool fresh = true;
    for (const Point3& existing : out) {
      if (distance(existing, p) <= eps) {
        fresh = false;
        break;
      }
    }
    if (fresh) out.push_back(p);
  }
  std::sort(out.begin(), out.end(), lex_less);
  return out;
}

}  // namespace planeform
