#include "planeform/geometry.hpp"

#include <algorithm>
#include <array>
#include <random>

namespace planeform {
namespace {

// --- balls through boundary point sets -------------------------------------
//
// The recursion below needs the smallest ball with a given support set on its
// boundary. Degenerate supports (collinear triples, coplanar quadruples) fall
// back to the minimal ball of the points, which is what the recursion expects.

Ball ball1(const Point3& a) { return {a, 0.0}; }

Ball ball2(const Point3& a, const Point3& b) {
  Point3 c = (a + b) * 0.5;
  return {c, distance(a, c)};
}

Ball ball3(const Point3& a, const Point3& b, const Point3& c) {
  const Vec3 u = b - a, v = c - a;
  const double uu = dot(u, u), vv = dot(v, v), uv = dot(u, v);
  const double det = uu * vv - uv * uv;  // |u x v|^2
  if (det <= 1e-14 * uu * vv) {
    // Collinear: the minimal ball is spanned by the extreme pair.
    Ball best = ball2(a, b);
    for (const Ball& cand : {ball2(a, c), ball2(b, c)}) {
      if (cand.radius > best.radius) best = cand;
    }
    return best;
  }
  const double s = 0.5 * (uu * vv - vv * uv) / det;
  const double t = 0.5 * (uu * vv - uu * uv) / det;
  Point3 center = a + s * u + t * v;
  return {center, distance(center, a)};
}

Ball ball4(const Point3& a, const Point3& b, const Point3& c, const Point3& d) {
  // Solve 2 (p_i - a) . x = |p_i|^2 - |a|^2 for the circumcenter x.
  const Vec3 r1 = b - a, r2 = c - a, r3 = d - a;
  Mat3 m = Mat3::from_columns(r1, r2, r3).transposed();
  const double det = m.det();
  const double scale = norm(r1) * norm(r2) * norm(r3);
  if (std::abs(det) <= 1e-12 * std::max(scale, 1e-300)) {
    // Coplanar: minimal ball of the four points via the triples.
    Ball best{{},  -1.0};
    const std::array<Point3, 4> q{a, b, c, d};
    for (int skip = 0; skip < 4; ++skip) {
      std::array<Point3, 3> tri;
      int k = 0;
      for (int i = 0; i < 4; ++i)
        if (i != skip) tri[k++] = q[i];
      Ball cand = ball3(tri[0], tri[1], tri[2]);
      if (cand.contains(q[skip], 1e-9 * cand.radius + 1e-12) &&
          (best.radius < 0.0 || cand.radius < best.radius)) {
        best = cand;
      }
    }
    if (best.radius >= 0.0) return best;
    return ball3(a, b, c);  // fully degenerate input; any enclosing fallback
  }
  const Vec3 rhs{0.5 * dot(r1, r1), 0.5 * dot(r2, r2), 0.5 * dot(r3, r3)};
  // Cramer's rule.
  auto col_replaced = [&](int j, const Vec3& v) {
    Mat3 r = m;
    r.m[0][j] = v.x;
    r.m[1][j] = v.y;
    r.m[2][j] = v.z;
    return r;
  };
  Vec3 x{col_replaced(0, rhs).det() / det, col_replaced(1, rhs).det() / det,
         col_replaced(2, rhs).det() / det};
  Point3 center = a + x;
  return {center, distance(center, a)};
}

Ball ball_of_boundary(const std::vector<Point3>& r) {
  switch (r.size()) {
    case 0: return {{}, -1.0};
    case 1: return ball1(r[0]);
    case 2: return ball2(r[0], r[1]);
    case 3: return ball3(r[0], r[1], r[2]);
    default: return ball4(r[0], r[1], r[2], r[3]);
  }
}

Ball welzl_mtf(std::vector<Point3>& pts, std::size_t n, std::vector<Point3>& support) {
  Ball b = ball_of_boundary(support);
  if (support.size() == 4) return b;
  for (std::size_t i = 0; i < n; ++i) {
    const double slack = 1e-10 * std::abs(b.radius) + 1e-14;
    if (b.radius < 0.0 || !b.contains(pts[i], slack)) {
      support.push_back(pts[i]);
      b = welzl_mtf(pts, i, support);
      support.pop_back();
      // Move-to-front keeps hard points early in later passes.
      Point3 p = pts[i];
      for (std::size_t j = i; j > 0; --j) pts[j] = pts[j - 1];
      pts[0] = p;
    }
  }
  return b;
}

}  // namespace

Ball smallest_enclosing_ball(std::span<const Point3> points) {
  if (points.empty()) throw Error("empty point set");
  std::vector<Point3> pts(points.begin(), points.end());
  std::mt19937_64 rng(0x5eb0f2a3d1c49e77ULL);  // fixed seed: deterministic output
  for (std::size_t i = pts.size(); i > 1; --i) {
    std::size_t j = rng() % i;
    std::swap(pts[i - 1], pts[j]);
  }
  std::vector<Point3> support;
  support.reserve(4);
  Ball b = welzl_mtf(pts, pts.size(), support);
  // Inflate to exact containment so callers can rely on radius >= distances.
  double r = 0.0;
  for (const Point3& p : points) r = std::max(r, distance(b.center, p));
  b.radius = r;
  return b;
}

Ball innermost_empty_ball(std::span<const Point3> points, const Point3& center,
                          const Tolerance& tol) {
  if (points.empty()) throw Error("empty point set");
  double rmin = distance(center, points[0]);
  double rmax = rmin;
  for (const Point3& p : points) {
    const double d = distance(center, p);
    rmin = std::min(rmin, d);
    rmax = std::max(rmax, d);
  }
  if (rmin <= tol.eps(rmax)) throw Error("center occupied");
  return {center, rmin};
}

std::optional<Mat3> rotation_from_vector_pairs(const Vec3& a, const Vec3& b, const Vec3& a2,
                                               const Vec3& b2, const Tolerance& tol) {
  const Vec3 c = cross(a, b);
  const Vec3 c2 = cross(a2, b2);
  const double span_eps = tol.eps(norm(a) * norm(b));
  if (norm(c) <= span_eps || norm(c2) <= span_eps) throw Error("collinear basis vectors");

  // M maps the (not necessarily orthogonal) basis (a, b, a x b) onto
  // (a2, b2, a2 x b2): M = B2 * B^-1.
  Mat3 basis = Mat3::from_columns(a, b, c);
  Mat3 image = Mat3::from_columns(a2, b2, c2);
  const double det = basis.det();
  Mat3 inv;
  {
    const Mat3& s = basis;
    inv.m[0][0] = (s.m[1][1] * s.m[2][2] - s.m[1][2] * s.m[2][1]) / det;
    inv.m[0][1] = (s.m[0][2] * s.m[2][1] - s.m[0][1] * s.m[2][2]) / det;
    inv.m[0][2] = (s.m[0][1] * s.m[1][2] - s.m[0][2] * s.m[1][1]) / det;
    inv.m[1][0] = (s.m[1][2] * s.m[2][0] - s.m[1][0] * s.m[2][2]) / det;
    inv.m[1][1] = (s.m[0][0] * s.m[2][2] - s.m[0][2] * s.m[2][0]) / det;
    inv.m[1][2] = (s.m[0][2] * s.m[1][0] - s.m[0][0] * s.m[1][2]) / det;
    inv.m[2][0] = (s.m[1][0] * s.m[2][1] - s.m[1][1] * s.m[2][0]) / det;
    inv.m[2][1] = (s.m[0][1] * s.m[2][0] - s.m[0][0] * s.m[2][1]) / det;
    inv.m[2][2] = (s.m[0][0] * s.m[1][1] - s.m[0][1] * s.m[1][0]) / det;
  }
  Mat3 m = image * inv;

  // Verify orthonormality and orientation; mismatched norms/angles land here.
  const double ortho_eps = std::max(1e2 * tol.rel, tol.abs);
  Mat3 mtm = m.transposed() * m;
  if (max_abs_diff(mtm, Mat3::identity()) > ortho_eps) return std::nullopt;
  if (std::abs(m.det() - 1.0) > ortho_eps) return std::nullopt;
  return m;
}

Vec3 canonical_axis(const Vec3& direction) {
  const double len = norm(direction);
  if (len == 0.0) return {0, 0, 0};
  Vec3 u = direction / len;
  const double lead_eps = 1e-12;
  if (std::abs(u.x) > lead_eps) return u.x < 0 ? -u : u;
  u.x = 0.0;
  if (std::abs(u.y) > lead_eps) return u.y < 0 ? -u : u;
  u.y = 0.0;
  return u.z < 0 ? -u : u;
}

SymmetricEigen symmetric_eigen(const Mat3& input) {
  // Cyclic Jacobi; plenty for 3x3 covariance matrices.
  Mat3 a = input;
  Mat3 v = Mat3::identity();
  for (int sweep = 0; sweep < 32; ++sweep) {
    double off = std::abs(a.m[0][1]) + std::abs(a.m[0][2]) + std::abs(a.m[1][2]);
    if (off < 1e-15 * (std::abs(a.m[0][0]) + std::abs(a.m[1][1]) + std::abs(a.m[2][2]) + 1e-300))
      break;
    for (int p = 0; p < 2; ++p)
      for (int q = p + 1; q < 3; ++q) {
        if (std::abs(a.m[p][q]) < 1e-300) continue;
        const double theta = (a.m[q][q] - a.m[p][p]) / (2.0 * a.m[p][q]);
        const double t = (theta >= 0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        Mat3 rot = Mat3::identity();
        rot.m[p][p] = c;
        rot.m[q][q] = c;
        rot.m[p][q] = s;
        rot.m[q][p] = -s;
        a = rot.transposed() * a * rot;
        v = v * rot;
      }
  }
  std::array<int, 3> order{0, 1, 2};
  std::sort(order.begin(), order.end(),
            [&](int i, int j) { return a.m[i][i] < a.m[j][j]; });
  SymmetricEigen out;
  for (int i = 0; i < 3; ++i) {
    out.values[i] = a.m[order[i]][order[i]];
    out.vectors[i] = v.column(order[i]);
  }
  return out;
}

namespace {

Point3 centroid(std::span<const Point3> pts) {
  Point3 c;
  for (const Point3& p : pts) c += p;
  return c / static_cast<double>(pts.size());
}

Mat3 covariance(std::span<const Point3> pts, const Point3& mean) {
  Mat3 cov;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) cov.m[i][j] = 0.0;
  for (const Point3& p : pts) {
    const Vec3 d = p - mean;
    const double v[3] = {d.x, d.y, d.z};
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) cov.m[i][j] += v[i] * v[j];
  }
  return cov;
}

}  // namespace

PlaneFit fit_plane(std::span<const Point3> points) {
  if (points.empty()) throw Error("empty point set");
  const Point3 mean = centroid(points);
  const SymmetricEigen eig = symmetric_eigen(covariance(points, mean));
  Vec3 n = canonical_axis(eig.vectors[0]);
  if (norm(n) == 0.0) n = {0, 0, 1};
  Plane plane{n, dot(n, mean)};
  double dev = 0.0;
  for (const Point3& p : points) dev = std::max(dev, std::abs(plane.signed_distance(p)));
  return {plane, dev};
}

LineFit fit_line(std::span<const Point3> points) {
  if (points.empty()) throw Error("empty point set");
  const Point3 mean = centroid(points);
  const SymmetricEigen eig = symmetric_eigen(covariance(points, mean));
  Vec3 dir = canonical_axis(eig.vectors[2]);
  if (norm(dir) == 0.0) dir = {0, 0, 1};
  double dev = 0.0;
  for (const Point3& p : points) {
    const Vec3 d = p - mean;
    dev = std::max(dev, norm(d - dot(d, dir) * dir));
  }
  return {mean, dir, dev};
}

bool coplanar(std::span<const Point3> points, const Tolerance& tol) {
  if (points.size() <= 3) return true;
  const Ball b = smallest_enclosing_ball(points);
  return fit_plane(points).max_deviation <= tol.eps(b.radius);
}

bool collinear(std::span<const Point3> points, const Tolerance& tol) {
  if (points.size() <= 2) return true;
  const Ball b = smallest_enclosing_ball(points);
  return fit_line(points).max_deviation <= tol.eps(b.radius);
}

bool all_distinct(std::span<const Point3> points, const Tolerance& tol) {
  if (points.size() < 2) return true;
  const Ball b = smallest_enclosing_ball(points);
  const double eps = tol.eps(b.radius);
  std::vector<Point3> sorted(points.begin(), points.end());
  std::sort(sorted.begin(), sorted.end(), [](const Point3& a, const Point3& p) {
    return lex_less(a, p);
  });
  for (std::size_t i = 0; i + 1 < sorted.size(); ++i) {
    // Points within eps of each other differ by at most eps in x, so only
    // neighbors in x order need checking.
    for (std::size_t j = i + 1; j < sorted.size() && sorted[j].x - sorted[i].x <= eps; ++j) {
      if (distance(sorted[i], sorted[j]) <= eps) return false;
    }
  }
  return true;
}

}  // namespace planeform
